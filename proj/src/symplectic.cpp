#include "symroot/symplectic.hpp"

#include <utility>

#include "symroot/error.hpp"

namespace symroot {

namespace {

BitMat random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BitMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1U);
    }
    return m;
}

// Coordinates (k x d) of the vectors in the columns of `targets` with respect
// to the independent columns of `basis`.
BitMat coordinates_in(const BitMat& basis, const BitMat& targets) {
    BitMat coords(basis.cols(), targets.cols());
    for (std::size_t j = 0; j < targets.cols(); ++j) {
        auto c = solve(basis, targets.column(j));
        if (!c) throw Error("vector outside the span of the given basis");
        for (std::size_t i = 0; i < basis.cols(); ++i) coords.set(i, j, c->get(i));
    }
    return coords;
}

}  // namespace

BitMat SymplecticBasis::as_matrix(std::size_t dim) const {
    std::vector<BitVec> cols;
    cols.reserve(2 * x.size() + z.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        cols.push_back(x[i]);
        cols.push_back(y[i]);
    }
    cols.insert(cols.end(), z.begin(), z.end());
    return BitMat::from_columns(cols, dim);
}

SymplecticBasis compute_symplectic_basis(const BitMat& gram) {
    const std::size_t dim = gram.rows();
    std::vector<BitVec> work;
    work.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) work.push_back(BitVec::unit(dim, i));

    SymplecticBasis out;
    for (;;) {
        std::size_t pi = work.size();
        std::size_t pj = work.size();
        for (std::size_t i = 0; i < work.size() && pi == work.size(); ++i) {
            for (std::size_t j = 0; j < work.size(); ++j) {
                if (j != i && gram.form(work[i], work[j])) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == work.size()) break;

        const BitVec x = work[pi];
        const BitVec y = work[pj];
        std::vector<BitVec> rest;
        rest.reserve(work.size() - 2);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == pi || i == pj) continue;
            BitVec u = work[i];
            const bool uy = gram.form(u, y);
            const bool ux = gram.form(u, x);
            if (uy) u ^= x;
            if (ux) u ^= y;
            rest.push_back(std::move(u));
        }
        out.x.push_back(x);
        out.y.push_back(y);
        work = std::move(rest);
    }
    out.z = std::move(work);
    return out;
}

SympSpace::SympSpace(BitMat gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw Error("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw Error("Gram matrix must be symmetric");
    for (std::size_t i = 0; i < gram_.rows(); ++i) {
        if (gram_.get(i, i)) throw Error("Gram matrix must have zero diagonal (form must be alternating)");
    }
    radical_ = kernel_basis(gram_);
    basis_ = compute_symplectic_basis(gram_);
    const std::size_t r = rank(gram_);
    if (r % 2 != 0) throw Error("alternating form with odd rank: corrupted Gram matrix");
    type_ = {r / 2, gram_.rows() - r};
}

SympSpace SympSpace::standard(SpaceType type) {
    const std::size_t dim = 2 * type.n + type.k;
    BitMat g(dim, dim);
    for (std::size_t i = 0; i < type.n; ++i) {
        g.set(2 * i, 2 * i + 1);
        g.set(2 * i + 1, 2 * i);
    }
    return SympSpace(std::move(g));
}

std::vector<BitVec> radical(const SympSpace& s) { return s.radical(); }
SymplecticBasis symplectic_basis(const SympSpace& s) { return s.basis(); }
SpaceType space_type(const SympSpace& s) { return s.type(); }

SympSpace induced_space(const SympSpace& s, std::span<const BitVec> basis) {
    BitMat g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (s.form(basis[i], basis[j])) {
                g.set(i, j);
                g.set(j, i);
            }
        }
    }
    return SympSpace(std::move(g));
}

Projection orthogonal_project(const SympSpace& s, std::span<const BitVec> wbasis, const BitVec& v) {
    if (v.dim() != s.dim()) throw DimensionMismatch("orthogonal_project: vector of wrong dimension");
    const auto ech = echelon_basis(wbasis, s.dim());
    const SympSpace w = induced_space(s, ech);
    const BitMat embed = BitMat::from_columns(ech, s.dim());

    for (const auto& zc : w.radical()) {
        if (s.form(v, embed * zc)) throw Error("orthogonal_project: v is not orthogonal to the radical of W");
    }

    BitVec inside(s.dim());
    const auto& b = w.basis();
    for (std::size_t k = 0; k < b.x.size(); ++k) {
        const BitVec xk = embed * b.x[k];
        const BitVec yk = embed * b.y[k];
        if (s.form(v, yk)) inside ^= xk;
        if (s.form(v, xk)) inside ^= yk;
    }
    return {v + inside, inside};
}

MixedForm::MixedForm(SympSpace base, BitMat proj, BitMat radform)
    : base_(std::move(base)), proj_(std::move(proj)), radform_(std::move(radform)) {
    const std::size_t d = base_.dim();
    const std::size_t k = base_.radical().size();
    if (proj_.rows() != d || proj_.cols() != d) throw Error("projection has wrong shape");
    if (radform_.rows() != k || radform_.cols() != k) throw Error("radical form has wrong shape");
    if (!(proj_ * proj_ == proj_)) throw Error("projection is not idempotent");
    if (rank(proj_) != k) throw Error("projection image is not the radical");
    if (!radform_.is_symmetric()) throw Error("radical form is not symmetric");
    if (rank(radform_) != k) throw Error("radical form is degenerate");

    const BitMat rad = BitMat::from_columns(base_.radical(), d);
    try {
        coords_ = k == 0 ? BitMat(0, d) : coordinates_in(rad, proj_);
    } catch (const Error&) {
        throw Error("projection image is not the radical");
    }
    completed_ = base_.gram() + coords_.transpose() * radform_ * coords_;
    if (rank(completed_) != d) throw Error("mixed completion is degenerate");
}

MixedForm mixed_completion(const SympSpace& s, const BitMat& proj_choice, const BitMat& radform_choice) {
    return MixedForm(s, proj_choice, radform_choice);
}

CompletionChoices default_completion_choices(const SympSpace& s) {
    const std::size_t d = s.dim();
    const auto& b = s.basis();
    const std::size_t k = b.z.size();
    const BitMat bm = b.as_matrix(d);
    const BitMat binv = *inverse(bm);

    BitMat keep(d, d);
    for (std::size_t i = d - k; i < d; ++i) keep.set(i, i);
    BitMat proj = bm * keep * binv;

    if (k == 0) return {std::move(proj), BitMat(0, 0)};
    const BitMat rad = BitMat::from_columns(s.radical(), d);
    const BitMat zmat = BitMat::from_columns(b.z, d);
    const BitMat t = coordinates_in(rad, zmat);
    const BitMat tinv = *inverse(t);
    return {std::move(proj), tinv.transpose() * tinv};
}

CompletionChoices random_completion_choices(const SympSpace& s, std::mt19937_64& rng) {
    const std::size_t d = s.dim();
    const std::size_t k = s.radical().size();
    if (k == 0) return {BitMat(d, d), BitMat(0, 0)};

    const MixedForm base(s, default_completion_choices(s).proj, BitMat::identity(k));
    const BitMat rad = BitMat::from_columns(s.radical(), d);
    // Left inverse of `rad` from the default projection: rad * c0 = proj0.
    BitMat c0(k, d);
    for (std::size_t j = 0; j < d; ++j) {
        const BitVec cj = base.radical_coords(BitVec::unit(d, j));
        for (std::size_t i = 0; i < k; ++i) c0.set(i, j, cj.get(i));
    }
    // Every left inverse has the form c0 + X (I - rad c0).
    const BitMat complement = BitMat::identity(d) + rad * c0;
    const BitMat left = c0 + random_matrix(k, d, rng) * complement;
    BitMat proj = rad * left;

    BitMat radform(k, k);
    do {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i; j < k; ++j) {
                const bool bit = rng() & 1U;
                radform.set(i, j, bit);
                radform.set(j, i, bit);
            }
        }
    } while (rank(radform) != k);
    return {std::move(proj), std::move(radform)};
}

BitMat random_alternating(std::size_t dim, std::mt19937_64& rng) {
    BitMat g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            if (rng() & 1U) {
                g.set(i, j);
                g.set(j, i);
            }
        }
    }
    return g;
}

}  // namespace symroot
