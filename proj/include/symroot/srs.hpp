#pragma once

// Symplectic root systems: a graph decorated by vectors of a symplectic F2
// space, with non-orthogonality matching adjacency and the decorations
// spanning the space.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "symroot/gf2.hpp"
#include "symroot/graph.hpp"
#include "symroot/symplectic.hpp"

namespace symroot {

class Srs {
public:
    /// Validates; throws ValidationError naming the first violated condition.
    Srs(Graph graph, SympSpace space, std::vector<BitVec> deco);

    const Graph& graph() const noexcept { return graph_; }
    const SympSpace& space() const noexcept { return space_; }
    const std::vector<BitVec>& deco() const noexcept { return deco_; }
    const BitVec& deco(std::size_t p) const { return deco_.at(p); }
    std::size_t node_count() const noexcept { return deco_.size(); }
    std::size_t dim() const noexcept { return space_.dim(); }
    SpaceType type() const noexcept { return space_.type(); }

    friend bool operator==(const Srs& a, const Srs& b) noexcept {
        return a.graph_ == b.graph_ && a.space_ == b.space_ && a.deco_ == b.deco_;
    }

private:
    Graph graph_;
    SympSpace space_;
    std::vector<BitVec> deco_;
};

/// Linear map between symplectic spaces (matrix acting on columns) that
/// preserves the form and whose kernel lies in the radical of the source.
class SympMap {
public:
    /// Throws Error when either invariant fails.
    SympMap(BitMat matrix, SympSpace src, SympSpace dst);

    const BitMat& matrix() const noexcept { return matrix_; }
    const SympSpace& src() const noexcept { return src_; }
    const SympSpace& dst() const noexcept { return dst_; }
    BitVec operator()(const BitVec& v) const { return matrix_ * v; }
    bool bijective() const;
    bool surjective() const;

private:
    BitMat matrix_;
    SympSpace src_;
    SympSpace dst_;
};

Srs validate_srs(const Graph& g, const SympSpace& space, std::vector<BitVec> deco);

/// Gram = adjacency, decoration of node p = p-th standard vector.
Srs minimal_srs(const Graph& g);

bool is_minimal(const Srs& s);

/// Restriction to an ordered node subset; the span of the restricted
/// decorations is re-coordinatised by its reduced echelon basis.
Srs restrict_srs(const Srs& s, const std::vector<std::size_t>& nodes);

struct Quotient {
    Srs srs;
    SympMap projection;
};

/// Quotient by U = span(u_basis), each element of which must lie in the
/// radical. Coordinates of V/U are the non-pivot coordinates of U's echelon
/// basis.
Quotient quotient(const Srs& s, std::span<const BitVec> u_basis);

struct QuotientClass {
    /// Echelon basis of the kernel U inside the minimal SRS coordinates.
    std::vector<BitVec> kernel;
    Srs srs;
};

/// One quotient of the minimal SRS per subspace of its radical (radical
/// dimension <= 12), ordered by kernel dimension, so grouped by type.
std::vector<QuotientClass> enumerate_quotients(const Graph& g);

/// The isomorphism intertwining the decorations, or nullopt. Throws Error when
/// the graphs differ.
std::optional<SympMap> srs_isomorphic(const Srs& a, const Srs& b);

/// The unique homomorphism from a minimal SRS to b (throws on precondition
/// violations).
SympMap universal_map(const Srs& minimal, const Srs& b);

/// Transports decorations along a symplectic isomorphism onto `dst`.
Srs transport(const Srs& s, const BitMat& iso, const SympSpace& dst);

/// Relabels nodes: node i of s becomes node perm[i].
Srs relabel(const Srs& s, const Permutation& perm);

struct CocliqueBound {
    std::size_t n = 0;
    std::size_t gamma = 0;
    std::size_t bound = 0;
    bool holds = false;
    std::vector<std::size_t> coclique;
};

/// n of the minimal SRS against |G| - gamma.
CocliqueBound coclique_bound_check(const Graph& g);

nlohmann::json srs_to_json(const Srs& s);
/// Parses and validates; the optional "type"/"minimal" fields must agree.
Srs srs_from_json(const nlohmann::json& j);

}  // namespace symroot
