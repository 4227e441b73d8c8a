#pragma once

// Alternating bilinear forms over F2.

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "symroot/gf2.hpp"

namespace symroot {

/// Type (n, k): n hyperbolic planes and a k-dimensional radical.
struct SpaceType {
    std::size_t n = 0;
    std::size_t k = 0;

    friend bool operator==(const SpaceType&, const SpaceType&) = default;
    friend auto operator<=>(const SpaceType&, const SpaceType&) = default;
};

struct SymplecticBasis {
    std::vector<BitVec> x;
    std::vector<BitVec> y;
    std::vector<BitVec> z;

    /// Columns ordered x1, y1, x2, y2, ..., xn, yn, z1, ..., zk.
    BitMat as_matrix(std::size_t dim) const;
};

/// A finite-dimensional F2 space with an alternating form given by its Gram
/// matrix. The radical, a symplectic basis and the type are computed once at
/// construction.
class SympSpace {
public:
    SympSpace() = default;
    /// Throws Error unless gram is square, symmetric and has zero diagonal.
    explicit SympSpace(BitMat gram);

    /// Standard space of type (n, k) in coordinates x1, y1, ..., xn, yn, z1..zk.
    static SympSpace standard(SpaceType type);

    std::size_t dim() const noexcept { return gram_.rows(); }
    const BitMat& gram() const noexcept { return gram_; }
    bool form(const BitVec& v, const BitVec& w) const { return gram_.form(v, w); }

    /// Kernel basis of the Gram matrix.
    const std::vector<BitVec>& radical() const noexcept { return radical_; }
    const SymplecticBasis& basis() const noexcept { return basis_; }
    SpaceType type() const noexcept { return type_; }
    bool nondegenerate() const noexcept { return type_.k == 0; }

    friend bool operator==(const SympSpace& a, const SympSpace& b) noexcept { return a.gram_ == b.gram_; }

private:
    BitMat gram_;
    std::vector<BitVec> radical_;
    SymplecticBasis basis_;
    SpaceType type_;
};

std::vector<BitVec> radical(const SympSpace& s);
SymplecticBasis symplectic_basis(const SympSpace& s);
SpaceType space_type(const SympSpace& s);

/// Symplectic basis of an arbitrary Gram matrix, by lowest-index pairing.
SymplecticBasis compute_symplectic_basis(const BitMat& gram);

/// The form restricted to span(basis), in the coordinates of `basis`
/// (which must be linearly independent).
SympSpace induced_space(const SympSpace& s, std::span<const BitVec> basis);

struct Projection {
    BitVec orthogonal;  ///< v0, orthogonal to all of W
    BitVec inside;      ///< vW, an element of W
};

/// Splits v = v0 + vW with vW in W = span(wbasis) and v0 orthogonal to W.
/// Requires v orthogonal to the radical of W; throws Error otherwise.
Projection orthogonal_project(const SympSpace& s, std::span<const BitVec> wbasis, const BitVec& v);

/// A projection onto the radical together with a nondegenerate symmetric form
/// on the radical, completing the alternating form to a nondegenerate one.
class MixedForm {
public:
    /// `radform` is expressed in the basis s.radical(). Throws Error when
    /// `proj` is not a projection onto the radical or `radform` is not
    /// symmetric and nondegenerate.
    MixedForm(SympSpace base, BitMat proj, BitMat radform);

    const SympSpace& base() const noexcept { return base_; }
    const BitMat& proj() const noexcept { return proj_; }
    const BitMat& radform() const noexcept { return radform_; }
    /// Gram matrix of <<v,w>> = <v,w> + (pi v, pi w).
    const BitMat& completed() const noexcept { return completed_; }

    bool evaluate(const BitVec& v, const BitVec& w) const { return completed_.form(v, w); }
    /// Coordinates of pi(v) in the radical basis.
    BitVec radical_coords(const BitVec& v) const { return coords_ * v; }

private:
    SympSpace base_;
    BitMat proj_;
    BitMat radform_;
    BitMat coords_;
    BitMat completed_;
};

MixedForm mixed_completion(const SympSpace& s, const BitMat& proj_choice, const BitMat& radform_choice);

struct CompletionChoices {
    BitMat proj;
    BitMat radform;
};

/// Projection along the hyperbolic planes of the symplectic basis onto
/// span{z_j}, with the identity form in the {z_j} basis (converted to the
/// radical() basis).
CompletionChoices default_completion_choices(const SympSpace& s);

/// A uniformly random projection onto the radical and a random nondegenerate
/// symmetric radical form.
CompletionChoices random_completion_choices(const SympSpace& s, std::mt19937_64& rng);

/// Random alternating Gram matrix.
BitMat random_alternating(std::size_t dim, std::mt19937_64& rng);

}  // namespace symroot
