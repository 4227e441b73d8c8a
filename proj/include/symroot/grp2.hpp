#pragma once

// Central extensions Z2 -> G -> V given by a bilinear cocycle beta with
// beta + beta^T equal to the Gram matrix of V.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symroot/gf2.hpp"
#include "symroot/graph.hpp"
#include "symroot/srs.hpp"
#include "symroot/symplectic.hpp"

namespace symroot {

struct GroupElement {
    BitVec vec;
    bool sign = false;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class CocycleGroup {
public:
    /// Throws Error unless beta is dim x dim with beta + beta^T = Gram.
    CocycleGroup(SympSpace space, BitMat beta);

    const SympSpace& space() const noexcept { return space_; }
    const BitMat& beta() const noexcept { return beta_; }
    std::size_t dim() const noexcept { return space_.dim(); }
    /// 2^(dim+1); dim must be at most 62.
    std::uint64_t order() const;

    GroupElement identity() const { return {BitVec(dim()), false}; }
    GroupElement central() const { return {BitVec(dim()), true}; }
    /// q(v) = beta(v,v), the sign of the square of any lift of v.
    bool square_sign(const BitVec& v) const { return beta_.form(v, v); }

private:
    SympSpace space_;
    BitMat beta_;
};

/// beta = strict upper triangle of the Gram matrix in the coordinates of the
/// space's symplectic basis, pulled back to the original coordinates.
CocycleGroup make_group(const SympSpace& s);

GroupElement multiply(const CocycleGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const CocycleGroup& g, const GroupElement& a);
GroupElement commutator(const CocycleGroup& g, const GroupElement& a, const GroupElement& b);
/// 1, 2 or 4.
unsigned element_order(const CocycleGroup& g, const GroupElement& a);

/// Every element, vec in mask order and sign 0 before 1 (dim <= 20).
std::vector<GroupElement> all_elements(const CocycleGroup& g);

/// Elements commuting with everything: lifts of the radical.
std::vector<GroupElement> center(const CocycleGroup& g);

/// Lifts with sign 0 of the decorations; throws Error when the space differs
/// or the lifts do not have the graph of s as commutativity graph.
std::vector<GroupElement> lift_decoration(const Srs& s, const CocycleGroup& g);

/// Edge ij iff the i-th and j-th elements do not commute.
Graph commutativity_graph(const CocycleGroup& g, const std::vector<GroupElement>& elements);

struct BurnsideResult {
    bool generates = false;
    bool minimal = false;
    /// Dimension of the span of the images modulo the Frattini subgroup.
    std::size_t basis_size = 0;
    /// Dimension of the Frattini quotient.
    std::size_t frattini_rank = 0;
};

BurnsideResult burnside_check(const CocycleGroup& g, const std::vector<GroupElement>& gens);

enum class ExtraspecialSign { plus, minus, not_applicable };

const char* to_string(ExtraspecialSign s) noexcept;

/// Counts v with q(v) = 1; plus iff the count is 2^(2n-1) - 2^(n-1).
ExtraspecialSign extraspecial_sign(const CocycleGroup& g);

}  // namespace symroot
