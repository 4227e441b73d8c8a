#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "symroot/error.hpp"
#include "symroot/symplectic.hpp"

using namespace symroot;

namespace {

std::vector<oracle::Mask> row_masks(const BitMat& m) {
    std::vector<oracle::Mask> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r).to_mask());
    return out;
}

}  // namespace

TEST_CASE("type of a random alternating form matches rank") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const BitMat g = random_alternating(1 + rng() % 12, rng);
        const SympSpace s(g);
        const auto [n, k] = oracle::alt_type(row_masks(g));
        CHECK(s.type() == SpaceType{n, k});
        CHECK(s.radical().size() == k);
        for (const auto& r : s.radical()) CHECK((g * r).is_zero());
    }
}

TEST_CASE("symplectic basis has the standard Gram matrix") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const SympSpace s(random_alternating(1 + rng() % 10, rng));
        const BitMat b = s.basis().as_matrix(s.dim());
        CHECK(rank(b) == s.dim());
        CHECK(b.transpose() * s.gram() * b == SympSpace::standard(s.type()).gram());
    }
}

TEST_CASE("standard space coordinates") {
    const SympSpace s = SympSpace::standard({2, 1});
    CHECK(s.dim() == 5);
    CHECK(s.gram().to_strings() == std::vector<std::string>{"01000", "10000", "00010", "00100", "00000"});
    CHECK(s.radical() == std::vector<BitVec>{BitVec::from_string("00001")});
}

TEST_CASE("invalid Gram matrices are rejected") {
    CHECK_THROWS_AS(SympSpace(BitMat::from_strings(std::vector<std::string>{"10", "00"})), Error);
    CHECK_THROWS_AS(SympSpace(BitMat::from_strings(std::vector<std::string>{"01", "00"})), Error);
    CHECK_THROWS_AS(SympSpace(BitMat(2, 3)), Error);
}

TEST_CASE("orthogonal projection splits v") {
    std::mt19937_64 rng(31);
    int done = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const SympSpace s(random_alternating(2 + rng() % 8, rng));
        std::vector<BitVec> w;
        for (std::size_t i = 0; i < 1 + rng() % 3; ++i) w.push_back(BitVec::from_mask(s.dim(), rng()));
        const BitVec v = BitVec::from_mask(s.dim(), rng());
        try {
            const Projection p = orthogonal_project(s, w, v);
            CHECK(p.orthogonal + p.inside == v);
            for (const auto& x : w) CHECK_FALSE(s.form(p.orthogonal, x));
            auto ext = w;
            ext.push_back(p.inside);
            CHECK(rank(ext) == rank(w));
            ++done;
        } catch (const Error&) {
            // v pairs nontrivially with the radical of span(w)
        }
    }
    CHECK(done > 100);
}

TEST_CASE("default and random completions are nondegenerate") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const SympSpace s(random_alternating(1 + rng() % 9, rng));
        for (const auto& ch : {default_completion_choices(s), random_completion_choices(s, rng)}) {
            const MixedForm mf = mixed_completion(s, ch.proj, ch.radform);
            CHECK(oracle::rank(row_masks(mf.completed())) == s.dim());
            CHECK(mf.proj() * mf.proj() == mf.proj());
        }
    }
}

TEST_CASE("mixed completion rejects a degenerate radical form") {
    const SympSpace s(BitMat(2, 2));
    const auto ch = default_completion_choices(s);
    CHECK_THROWS_AS(MixedForm(s, ch.proj, BitMat(2, 2)), Error);
    CHECK_THROWS_AS(MixedForm(s, BitMat(2, 2), ch.radform), Error);
}
