#include <doctest.h>

#include <map>
#include <vector>

#include "oracles.hpp"
#include "symroot/error.hpp"
#include "symroot/srs.hpp"

using namespace symroot;

namespace {

std::vector<BitVec> units(std::size_t n) {
    std::vector<BitVec> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(BitVec::unit(n, i));
    return out;
}

}  // namespace

TEST_CASE("minimal SRS of the A2 path") {
    const Srs s = minimal_srs(Graph::path(2));
    CHECK(s.type() == SpaceType{1, 0});
    CHECK(is_minimal(s));
    CHECK(s.deco(0) == BitVec::from_string("10"));
}

TEST_CASE("minimal type of K_N alternates") {
    for (std::size_t n = 1; n <= 12; ++n) {
        const SpaceType t = minimal_srs(Graph::complete(n)).type();
        CHECK(t == SpaceType{n / 2, n % 2});
    }
}

TEST_CASE("constructor validation names the failing condition") {
    const Graph g = Graph::path(2);
    const SympSpace s = SympSpace::standard({1, 0});
    CHECK_THROWS_AS(Srs(g, s, {BitVec::from_string("10")}), ValidationError);
    CHECK_THROWS_AS(Srs(g, s, {BitVec::from_string("10"), BitVec::from_string("10")}), ValidationError);
    CHECK_THROWS_AS(Srs(Graph(2), s, {BitVec::from_string("10"), BitVec::from_string("01")}), ValidationError);
    CHECK_NOTHROW(Srs(g, s, {BitVec::from_string("10"), BitVec::from_string("01")}));
}

TEST_CASE("symplectic map invariants") {
    const SympSpace a = SympSpace::standard({1, 1});
    const SympSpace b = SympSpace::standard({1, 0});
    BitMat drop(2, 3);
    drop.set(0, 0);
    drop.set(1, 1);
    const SympMap m(drop, a, b);
    CHECK(m.surjective());
    CHECK_FALSE(m.bijective());
    BitMat bad(2, 3);
    bad.set(0, 0);
    bad.set(1, 2);
    CHECK_THROWS_AS(SympMap(bad, a, b), Error);
}

TEST_CASE("quotients of D4 by radical subspaces") {
    const auto classes = enumerate_quotients(dynkin_graph('D', 4));
    std::map<SpaceType, int> counts;
    for (const auto& c : classes) ++counts[c.srs.type()];
    CHECK(counts == std::map<SpaceType, int>{{{1, 2}, 1}, {{1, 1}, 3}, {{1, 0}, 1}});
    for (const auto& c : classes) {
        const SympMap u = universal_map(minimal_srs(dynkin_graph('D', 4)), c.srs);
        CHECK(u.surjective());
        CHECK(rank(u.matrix()) == 4 - c.kernel.size());
    }
}

TEST_CASE("quotient classes are pairwise non-isomorphic") {
    for (const auto& g : nonisomorphic_graphs(4)) {
        const auto classes = enumerate_quotients(g);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j)
                CHECK_FALSE(srs_isomorphic(classes[i].srs, classes[j].srs).has_value());
    }
}

TEST_CASE("isomorphism detection under a change of basis") {
    const Srs s = minimal_srs(dynkin_graph('E', 6));
    BitMat t = BitMat::identity(6);
    t.set(0, 3);
    t.set(4, 1);
    const SympSpace dst(t.transpose() * s.space().gram() * t);
    const auto inv = inverse(t);
    REQUIRE(inv.has_value());
    const Srs moved = transport(s, *inv, dst);
    const auto iso = srs_isomorphic(s, moved);
    REQUIRE(iso.has_value());
    for (std::size_t p = 0; p < s.node_count(); ++p) CHECK((*iso)(s.deco(p)) == moved.deco(p));
}

TEST_CASE("restriction re-coordinatises the span") {
    const Srs s = minimal_srs(Graph::path(4));
    const Srs r = restrict_srs(s, {0, 1, 2});
    CHECK(r.type() == SpaceType{1, 1});
    CHECK(r.graph() == Graph::path(3));
    CHECK(restrict_srs(s, {3, 0}).type() == SpaceType{0, 2});
}

TEST_CASE("relabel moves node i to perm[i]") {
    const Srs s = minimal_srs(Graph::path(3));
    const Srs r = relabel(s, {2, 0, 1});
    CHECK(r.deco(2) == s.deco(0));
    CHECK(r.graph().has_edge(2, 0));
    CHECK(r.graph().has_edge(0, 1));
}

TEST_CASE("coclique bound on small graphs") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) {
            const auto c = coclique_bound_check(g);
            CHECK(c.holds);
            CHECK(c.n <= g.node_count() - c.gamma);
        }
    const auto e = coclique_bound_check(Graph(5));
    CHECK(e.n == 0);
    CHECK(e.bound == 0);
}

TEST_CASE("JSON round trip and recorded type check") {
    const Srs s = minimal_srs(dynkin_graph('D', 5));
    const auto j = srs_to_json(s);
    CHECK(srs_from_json(j) == s);
    auto bad = j;
    bad["type"] = {4, 0};
    CHECK_THROWS_AS(srs_from_json(bad), Error);
}

TEST_CASE("minimal SRS has the adjacency as Gram matrix") {
    const Graph g = dynkin_graph('E', 7);
    const Srs s = minimal_srs(g);
    CHECK(s.space().gram() == g.adjacency());
    CHECK(s.deco() == units(7));
}
