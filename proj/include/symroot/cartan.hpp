#pragma once

// Cartan data and root systems, their Weyl action on the minimal symplectic
// root system of the parity graph, and the explicit ADE root systems.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symroot/gf2.hpp"
#include "symroot/graph.hpp"
#include "symroot/srs.hpp"
#include "symroot/symplectic.hpp"

namespace symroot {

/// Cartan matrix with C_{aa} = 2 and symmetrizers d with (a,b) = d_a C_{ab}.
struct CartanDatum {
    std::string name;
    std::vector<std::vector<int>> cartan;
    std::vector<int> d;

    std::size_t size() const noexcept { return d.size(); }
    int bilinear(std::size_t a, std::size_t b) const { return d.at(a) * cartan.at(a).at(b); }
};

/// Validates symmetry of d_a C_ab, min(d) = 1 and the Cartan integer rules.
CartanDatum make_cartan(std::string name, std::vector<std::vector<int>> cartan, std::vector<int> d);

/// Families A..G. B_n: last root short; C_n: last root long; F4: d = (2,2,1,1);
/// G2: d = (1,3). D and E use the node numbering of dynkin_graph.
CartanDatum cartan_datum(char family, std::size_t rank);

/// Simple-root coordinates.
using Root = std::vector<int>;

/// sigma_a(b) = b - (sum_j C_aj b_j) e_a.
Root reflect(const CartanDatum& c, std::size_t a, const Root& b);

struct RootSet {
    std::vector<Root> roots;  ///< sorted
    bool contains(const Root& r) const;
};

/// Closure of the simple roots under the simple reflections. Throws
/// CapExceeded beyond `cap` roots.
RootSet roots(const CartanDatum& c, std::size_t cap = 10000);

/// Edge ab iff (a,b) is odd.
Graph parity_graph(const CartanDatum& c);

struct WeylRep {
    CartanDatum datum;
    Srs srs;  ///< minimal SRS of the parity graph
    std::vector<BitMat> generators;
    RootSet root_set;
    std::map<Root, BitVec> extended_deco;

    const SympSpace& space() const noexcept { return srs.space(); }
};

/// Additive mod-2 extension of the minimal decoration to a root.
BitVec extend_to_root(const Srs& minimal, const Root& r);

/// Builds and verifies the representation; Error on a failed check.
WeylRep weyl_rep(const CartanDatum& c);

/// Sorted orbit of v under the generators.
std::vector<BitVec> weyl_orbit(const WeylRep& rep, const BitVec& v);

/// Order of the generated matrix group by breadth-first closure.
std::uint64_t group_order(const WeylRep& rep, std::size_t cap = 1000000);

/// Same order via Schreier-Sims on the action on vectors (dim <= 16).
std::uint64_t group_order_schreier_sims(const WeylRep& rep);

/// Order of a permutation group on {0..points-1} given by image arrays.
std::uint64_t permutation_group_order(std::size_t points, const std::vector<std::vector<std::uint32_t>>& gens);

struct RootFiber {
    BitVec image;
    std::vector<Root> roots;
};

/// Preimages of each vector in the image of the extended decoration.
std::vector<RootFiber> root_fibers(const WeylRep& rep);

/// Minimal SRS of the ADE diagram in coordinates x1, y1, ..., xn, yn, z1, ...,
/// built by the extension steps that produce the explicit decorations.
Srs ade_srs(char family, std::size_t rank);

/// Decorations of the A_{2n} path as constructed by ade_srs.
Srs a_even_chain(std::size_t n);

/// Name of coordinate i in the standard space of the given type ("x1", "z2").
std::string coordinate_label(SpaceType type, std::size_t i);

/// "z1+y3+y2+y1": z terms first, then by decreasing index with x before y.
std::string symbolic(const BitVec& v, SpaceType type);

/// Types and quotient-class counts, ordered by decreasing nullity.
std::vector<std::pair<SpaceType, std::size_t>> ade_table(char family, std::size_t rank);

struct QuotientAction {
    Permutation automorphism;
    /// class_map[i] = index of the class of pi . U_i
    Permutation class_map;
};

struct QuotientActionReport {
    std::vector<QuotientClass> classes;
    std::vector<QuotientAction> actions;
};

QuotientActionReport automorphism_action_on_quotients(const Graph& g);

}  // namespace symroot
