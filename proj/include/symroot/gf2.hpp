#pragma once

// Bit-packed linear algebra over the two-element field.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symroot {

class BitVec {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t dim);

    static BitVec unit(std::size_t dim, std::size_t i);
    /// Parses "1001" (index 0 first). Throws Error on characters other than 0/1.
    static BitVec from_string(std::string_view bits);
    /// Low `dim` bits of `mask`, bit i of the mask becoming entry i.
    static BitVec from_mask(std::size_t dim, std::uint64_t mask);

    std::size_t dim() const noexcept { return dim_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;
    std::optional<std::size_t> first_set() const noexcept;
    /// Entries 0..63 packed into an integer; only valid when dim <= 64.
    std::uint64_t to_mask() const;

    /// Parity of the coordinatewise product.
    bool dot(const BitVec& other) const;

    /// Zero-padded (or truncated) copy of a different dimension.
    BitVec resized(std::size_t dim) const;
    BitVec concat(const BitVec& tail) const;

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator+(BitVec a, const BitVec& b) { return a ^= b; }

    friend bool operator==(const BitVec& a, const BitVec& b) noexcept {
        return a.dim_ == b.dim_ && a.words_ == b.words_;
    }
    friend bool operator<(const BitVec& a, const BitVec& b) noexcept;

    std::string to_string() const;
    std::span<const Word> words() const noexcept { return words_; }

private:
    std::size_t dim_ = 0;
    std::vector<Word> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const noexcept;
};

/// Dense F2 matrix stored as packed rows. Matrices act on column vectors.
class BitMat {
public:
    BitMat() = default;
    BitMat(std::size_t rows, std::size_t cols);

    static BitMat identity(std::size_t n);
    static BitMat from_rows(std::span<const BitVec> rows, std::size_t cols);
    static BitMat from_columns(std::span<const BitVec> cols, std::size_t rows);
    static BitMat from_strings(std::span<const std::string> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);
    const BitVec& row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);
    BitVec column(std::size_t c) const;
    std::vector<BitVec> columns() const;

    BitMat transpose() const;
    bool is_zero() const noexcept;
    bool is_symmetric() const noexcept;

    /// v^T * M * w.
    bool form(const BitVec& v, const BitVec& w) const;

    BitVec operator*(const BitVec& v) const;
    BitMat operator*(const BitMat& other) const;
    BitMat& operator+=(const BitMat& other);
    friend BitMat operator+(BitMat a, const BitMat& b) { return a += b; }

    friend bool operator==(const BitMat& a, const BitMat& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::vector<std::string> to_strings() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

struct RowReduction {
    BitMat rref;
    std::vector<std::size_t> pivots;
    /// transform * input == rref
    BitMat transform;
};

/// Reduced row-echelon form with lowest-index pivoting.
RowReduction row_reduce(const BitMat& m);

std::size_t rank(const BitMat& m);
std::size_t rank(std::span<const BitVec> vectors);

/// Kernel basis: one vector per free column (increasing), that column set to 1,
/// the other free columns 0.
std::vector<BitVec> kernel_basis(const BitMat& m);

/// Particular solution of m*x = b with all free variables 0, or nullopt.
/// Throws DimensionMismatch when b.dim() != m.rows().
std::optional<BitVec> solve(const BitMat& m, const BitVec& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<BitMat> inverse(const BitMat& m);

/// Nonzero rows of the reduced echelon form of the given vectors; a canonical
/// basis of their span (equal spans give equal results).
std::vector<BitVec> echelon_basis(std::span<const BitVec> vectors, std::size_t dim);

/// Whether v lies in the span of an echelon basis produced by echelon_basis.
bool in_echelon_span(std::span<const BitVec> echelon, const BitVec& v);

/// Every subspace of F2^dim as its reduced echelon basis, ordered by
/// dimension, then pivot set, then free entries.
std::vector<std::vector<BitVec>> all_subspaces(std::size_t dim);

}  // namespace symroot
