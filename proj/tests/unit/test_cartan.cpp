#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "symroot/cartan.hpp"
#include "symroot/error.hpp"

using namespace symroot;

namespace {

std::vector<std::string> symbols(const Srs& s) {
    std::vector<std::string> out;
    for (const auto& f : s.deco()) out.push_back(symbolic(f, s.type()));
    return out;
}

// Number of positive roots of each finite type.
std::size_t positive_roots(char family, std::size_t r) {
    switch (family) {
        case 'A': return r * (r + 1) / 2;
        case 'B':
        case 'C': return r * r;
        case 'D': return r * (r - 1);
        case 'E': return r == 6 ? 36 : r == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

}  // namespace

TEST_CASE("root counts") {
    CHECK(roots(cartan_datum('A', 1)).roots.size() == 2);
    CHECK(roots(cartan_datum('A', 2)).roots.size() == 6);
    CHECK(roots(cartan_datum('B', 2)).roots.size() == 8);
    const std::vector<std::pair<char, std::size_t>> cases = {{'A', 5}, {'B', 4}, {'C', 5}, {'D', 6}, {'E', 6},
                                                             {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
    for (const auto& [f, r] : cases) CHECK(roots(cartan_datum(f, r)).roots.size() == 2 * positive_roots(f, r));
}

TEST_CASE("A2 roots explicitly") {
    const RootSet rs = roots(cartan_datum('A', 2));
    for (const Root& r : std::vector<Root>{{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}}) CHECK(rs.contains(r));
    CHECK_FALSE(rs.contains({1, -1}));
}

TEST_CASE("reflections") {
    const CartanDatum a2 = cartan_datum('A', 2);
    CHECK(reflect(a2, 0, {1, 0}) == Root{-1, 0});
    CHECK(reflect(a2, 0, {0, 1}) == Root{1, 1});
}

TEST_CASE("Cartan datum validation") {
    CHECK_THROWS_AS(make_cartan("bad", {{2, -1}, {-2, 2}}, {1, 1}), Error);
    CHECK_THROWS_AS(make_cartan("bad", {{2, -1}, {-1, 2}}, {2, 2}), Error);
    CHECK_NOTHROW(make_cartan("A2", {{2, -1}, {-1, 2}}, {1, 1}));
}

TEST_CASE("affine data exceed the root cap") {
    const CartanDatum affine = make_cartan("A1~", {{2, -2}, {-2, 2}}, {1, 1});
    CHECK_THROWS_AS(roots(affine, 500), CapExceeded);
}

TEST_CASE("parity graphs") {
    CHECK(parity_graph(cartan_datum('A', 4)) == dynkin_graph('A', 4));
    CHECK(parity_graph(cartan_datum('E', 7)) == dynkin_graph('E', 7));
    CHECK(parity_graph(cartan_datum('B', 4)).edge_count() == 0);
    CHECK(parity_graph(cartan_datum('G', 2)) == Graph::path(2));
    CHECK(parity_graph(cartan_datum('F', 4)) == Graph::from_edges(4, {{2, 3}}));
}

TEST_CASE("A2 Weyl representation") {
    const WeylRep rep = weyl_rep(cartan_datum('A', 2));
    REQUIRE(rep.generators.size() == 2);
    CHECK(rep.generators[0].to_strings() == std::vector<std::string>{"11", "01"});
    CHECK(rep.generators[1].to_strings() == std::vector<std::string>{"10", "11"});
    CHECK(group_order(rep) == 6);
    CHECK(weyl_orbit(rep, BitVec(2)) == std::vector<BitVec>{BitVec(2)});
    CHECK(weyl_orbit(rep, rep.srs.deco(0)).size() == 3);
    std::set<BitVec> images;
    for (const auto& [root, v] : rep.extended_deco) images.insert(v);
    CHECK(images.size() == 3);
}

TEST_CASE("A1 generator is the identity") {
    const WeylRep rep = weyl_rep(cartan_datum('A', 1));
    CHECK(rep.generators[0] == BitMat::identity(1));
    CHECK(group_order(rep) == 1);
}

TEST_CASE("generators are symplectic and intertwine") {
    for (const auto& [f, r] : std::vector<std::pair<char, std::size_t>>{{'B', 3}, {'C', 3}, {'F', 4}, {'G', 2}, {'D', 5}}) {
        const WeylRep rep = weyl_rep(cartan_datum(f, r));
        const BitMat& gram = rep.space().gram();
        for (std::size_t a = 0; a < rep.generators.size(); ++a) {
            const BitMat& m = rep.generators[a];
            CHECK(m.transpose() * gram * m == gram);
            for (const Root& root : rep.root_set.roots)
                CHECK(rep.extended_deco.at(reflect(rep.datum, a, root)) == m * rep.extended_deco.at(root));
        }
    }
}

TEST_CASE("Schreier-Sims agrees with BFS") {
    for (const auto& [f, r] : std::vector<std::pair<char, std::size_t>>{{'A', 3}, {'A', 4}, {'D', 4}, {'F', 4}, {'C', 4}}) {
        const WeylRep rep = weyl_rep(cartan_datum(f, r));
        CHECK(group_order(rep) == group_order_schreier_sims(rep));
    }
    CHECK(permutation_group_order(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}) == 24);
}

TEST_CASE("ADE decorations") {
    CHECK(symbols(ade_srs('A', 4)) == std::vector<std::string>{"x2+x1", "y1", "x1", "y2+y1"});
    const auto d4 = symbols(ade_srs('D', 4));
    CHECK(d4[2] == "z1+y1");
    CHECK(d4[3] == "z2+y1");
    CHECK(symbols(ade_srs('D', 5))[4] == "z1+x2+x1");
    const auto e8 = symbols(ade_srs('E', 8));
    CHECK(ade_srs('E', 8).type() == SpaceType{4, 0});
    CHECK(std::set<std::string>(e8.begin(), e8.end()).count("y4+y3") == 1);
    CHECK(std::set<std::string>(e8.begin(), e8.end()).count("x4+x3+x2") == 1);
    CHECK_THROWS_AS(ade_srs('E', 5), Error);
    CHECK_THROWS_AS(ade_srs('D', 3), Error);
}

TEST_CASE("ADE tables") {
    using Table = std::vector<std::pair<SpaceType, std::size_t>>;
    CHECK(ade_table('A', 5) == Table{{{2, 1}, 1}, {{2, 0}, 1}});
    CHECK(ade_table('D', 6) == Table{{{2, 2}, 1}, {{2, 1}, 3}, {{2, 0}, 1}});
    CHECK(ade_table('E', 6) == Table{{{3, 0}, 1}});
}

TEST_CASE("symbolic labels") {
    CHECK(coordinate_label({2, 1}, 0) == "x1");
    CHECK(coordinate_label({2, 1}, 3) == "y2");
    CHECK(coordinate_label({2, 1}, 4) == "z1");
    CHECK(symbolic(BitVec::from_string("11001"), {2, 1}) == "z1+x1+y1");
    CHECK(symbolic(BitVec::from_string("10011"), {2, 1}) == "z1+y2+x1");
    CHECK(symbolic(BitVec(5), {2, 1}) == "0");
}

TEST_CASE("diagram automorphisms on quotient classes") {
    const auto d6 = automorphism_action_on_quotients(dynkin_graph('D', 6));
    REQUIRE(d6.actions.size() == 2);
    std::size_t moved = 0;
    for (std::size_t i = 0; i < d6.classes.size(); ++i)
        if (d6.actions[1].class_map[i] != i) {
            ++moved;
            CHECK(d6.classes[i].srs.type() == SpaceType{2, 1});
        }
    CHECK(moved == 2);

    const auto d4 = automorphism_action_on_quotients(dynkin_graph('D', 4));
    CHECK(d4.actions.size() == 6);
    std::set<std::size_t> orbit;
    std::size_t first = 0;
    while (d4.classes[first].srs.type() != SpaceType{1, 1}) ++first;
    for (const auto& a : d4.actions) orbit.insert(a.class_map[first]);
    CHECK(orbit.size() == 3);

    const auto a4 = automorphism_action_on_quotients(dynkin_graph('A', 4));
    REQUIRE(a4.classes.size() == 1);
    for (const auto& a : a4.actions) CHECK(a.class_map[0] == 0);
}

TEST_CASE("root fibers for non-simply-laced data") {
    const WeylRep rep = weyl_rep(cartan_datum('B', 2));
    std::size_t total = 0;
    for (const auto& f : root_fibers(rep)) total += f.roots.size();
    CHECK(total == 8);
}
