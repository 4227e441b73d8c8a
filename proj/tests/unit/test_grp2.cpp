#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "symroot/error.hpp"
#include "symroot/grp2.hpp"
#include "symroot/srs.hpp"

using namespace symroot;

namespace {

std::vector<oracle::Mask> row_masks(const BitMat& m) {
    std::vector<oracle::Mask> out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r).to_mask());
    return out;
}

// Elements of order 4 in the group with cocycle beta: exactly the (v, a)
// with beta(v, v) = 1, using the law (v,a)^2 = (0, beta(v,v)).
std::size_t order_four_count(const CocycleGroup& g) {
    const auto beta = row_masks(g.beta());
    std::size_t count = 0;
    for (oracle::Mask v = 0; v < (oracle::Mask{1} << g.dim()); ++v)
        if (oracle::form(beta, v, v)) count += 2;
    return count;
}

// Closure of a set of elements under multiplication.
std::size_t generated_order(const CocycleGroup& g, const std::vector<GroupElement>& gens) {
    std::vector<GroupElement> seen = {g.identity()};
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (const auto& s : gens) {
            const GroupElement p = multiply(g, seen[i], s);
            if (std::find(seen.begin(), seen.end(), p) == seen.end()) seen.push_back(p);
        }
    return seen.size();
}

}  // namespace

TEST_CASE("type (1,0) group is dihedral of order 8") {
    const CocycleGroup g = make_group(SympSpace::standard({1, 0}));
    CHECK(g.order() == 8);
    CHECK(order_four_count(g) == 2);
    std::size_t fours = 0;
    for (const auto& e : all_elements(g)) fours += element_order(g, e) == 4;
    CHECK(fours == 2);
    CHECK(extraspecial_sign(g) == ExtraspecialSign::plus);
    const GroupElement x{BitVec::from_string("10"), false}, y{BitVec::from_string("01"), false};
    CHECK(commutator(g, x, y) == g.central());
    CHECK(commutator(g, x, x) == g.identity());
}

TEST_CASE("quaternion variant by a diagonal perturbation") {
    const SympSpace s = SympSpace::standard({1, 0});
    BitMat beta = make_group(s).beta();
    beta.set(0, 0, !beta.get(0, 0));
    beta.set(1, 1, !beta.get(1, 1));
    const CocycleGroup q(s, beta);
    std::size_t fours = 0;
    for (const auto& e : all_elements(q)) fours += element_order(q, e) == 4;
    CHECK(fours == 6);
    CHECK(order_four_count(q) == 6);
    CHECK(extraspecial_sign(q) == ExtraspecialSign::minus);
}

TEST_CASE("invalid cocycles are rejected") {
    const SympSpace s = SympSpace::standard({1, 0});
    CHECK_THROWS_AS(CocycleGroup(s, BitMat(2, 2)), Error);
}

TEST_CASE("abelian type (0,1)") {
    const CocycleGroup g = make_group(SympSpace::standard({0, 1}));
    CHECK(g.order() == 4);
    for (const auto& a : all_elements(g))
        for (const auto& b : all_elements(g)) CHECK(multiply(g, a, b) == multiply(g, b, a));
    for (const auto& a : all_elements(g)) CHECK(element_order(g, a) <= 2);
    CHECK(extraspecial_sign(g) == ExtraspecialSign::not_applicable);
}

TEST_CASE("commutators are central, bimultiplicative and given by the form") {
    const Srs s = minimal_srs(dynkin_graph('D', 4));
    const CocycleGroup g = make_group(s.space());
    const auto elems = all_elements(g);
    for (const auto& a : elems)
        for (const auto& b : elems) {
            const GroupElement c = commutator(g, a, b);
            CHECK(c.vec.is_zero());
            CHECK(c.sign == s.space().form(a.vec, b.vec));
        }
    for (std::size_t i = 0; i < elems.size(); i += 7)
        for (std::size_t j = 0; j < elems.size(); j += 5)
            for (std::size_t k = 0; k < elems.size(); k += 3) {
                const auto lhs = commutator(g, multiply(g, elems[i], elems[j]), elems[k]);
                const auto rhs = multiply(g, commutator(g, elems[i], elems[k]), commutator(g, elems[j], elems[k]));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("group axioms") {
    const CocycleGroup g = make_group(SympSpace::standard({1, 1}));
    const auto elems = all_elements(g);
    CHECK(elems.size() == 16);
    for (const auto& a : elems) {
        CHECK(multiply(g, a, g.identity()) == a);
        CHECK(multiply(g, a, inverse(g, a)) == g.identity());
        for (const auto& b : elems)
            for (const auto& c : elems) CHECK(multiply(g, multiply(g, a, b), c) == multiply(g, a, multiply(g, b, c)));
    }
}

TEST_CASE("lifts reconstruct the diagram") {
    for (const char* name : {"A2", "D4", "E6"}) {
        const Graph gr = dynkin_graph(name[0], static_cast<std::size_t>(name[1] - '0'));
        const Srs s = minimal_srs(gr);
        const CocycleGroup g = make_group(s.space());
        const auto lifts = lift_decoration(s, g);
        CHECK(commutativity_graph(g, lifts) == gr);
    }
    const Srs empty = minimal_srs(Graph(3));
    const CocycleGroup g = make_group(empty.space());
    CHECK(commutativity_graph(g, lift_decoration(empty, g)).edge_count() == 0);
}

TEST_CASE("A2 lifts generate the whole group minimally") {
    const Srs s = minimal_srs(Graph::path(2));
    const CocycleGroup g = make_group(s.space());
    const auto lifts = lift_decoration(s, g);
    CHECK(generated_order(g, lifts) == 8);
    const BurnsideResult b = burnside_check(g, lifts);
    CHECK(b.generates);
    CHECK(b.minimal);
    CHECK(b.basis_size == 2);
    auto extra = lifts;
    extra.push_back(multiply(g, lifts[0], lifts[1]));
    CHECK_FALSE(burnside_check(g, extra).minimal);
    CHECK(burnside_check(g, extra).generates);
}

TEST_CASE("non-minimal quotient lifts of A3 generate but are not minimal") {
    const auto classes = enumerate_quotients(Graph::path(3));
    const Srs& q = classes.back().srs;
    REQUIRE(q.type() == SpaceType{1, 0});
    const CocycleGroup g = make_group(q.space());
    const auto lifts = lift_decoration(q, g);
    CHECK(generated_order(g, lifts) == 8);
    const BurnsideResult b = burnside_check(g, lifts);
    CHECK(b.generates);
    CHECK_FALSE(b.minimal);
}

TEST_CASE("centers by brute force") {
    for (const SpaceType t : {SpaceType{2, 0}, SpaceType{1, 2}, SpaceType{0, 2}}) {
        const CocycleGroup g = make_group(SympSpace::standard(t));
        const auto elems = all_elements(g);
        std::size_t central = 0;
        for (const auto& a : elems) {
            bool ok = true;
            for (const auto& b : elems) ok = ok && multiply(g, a, b) == multiply(g, b, a);
            central += ok;
        }
        CHECK(center(g).size() == central);
        CHECK(central == (std::size_t{2} << t.k));
    }
}

TEST_CASE("sign rule against the order-four count") {
    std::mt19937_64 rng(43);
    for (std::size_t n = 1; n <= 3; ++n) {
        const SympSpace s = SympSpace::standard({n, 0});
        const std::size_t plus_count = (std::size_t{1} << (2 * n)) - (std::size_t{1} << n);
        const std::size_t minus_count = (std::size_t{1} << (2 * n)) + (std::size_t{1} << n);
        for (int trial = 0; trial < 20; ++trial) {
            BitMat beta = make_group(s).beta();
            for (std::size_t i = 0; i < 2 * n; ++i) beta.set(i, i, rng() & 1);
            const CocycleGroup g(s, beta);
            std::size_t fours = 0;
            for (const auto& e : all_elements(g)) fours += !(multiply(g, e, e) == g.identity());
            CHECK(fours == order_four_count(g));
            CHECK((fours == plus_count || fours == minus_count));
            CHECK((extraspecial_sign(g) == ExtraspecialSign::plus) == (fours == plus_count));
        }
    }
}
