#include "symroot/gf2.hpp"

#include <algorithm>
#include <bit>

#include "symroot/error.hpp"

namespace symroot {

namespace {

std::size_t word_count(std::size_t dim) { return (dim + BitVec::word_bits - 1) / BitVec::word_bits; }

}  // namespace

BitVec::BitVec(std::size_t dim) : dim_(dim), words_(word_count(dim), 0) {}

BitVec BitVec::unit(std::size_t dim, std::size_t i) {
    BitVec v(dim);
    v.set(i);
    return v;
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw Error("invalid bit string '" + std::string(bits) + "'");
        }
    }
    return v;
}

BitVec BitVec::from_mask(std::size_t dim, std::uint64_t mask) {
    if (dim > word_bits) throw DimensionMismatch("from_mask supports at most 64 entries");
    BitVec v(dim);
    if (dim > 0) {
        if (dim < word_bits) mask &= (Word{1} << dim) - 1;
        v.words_[0] = mask;
    }
    return v;
}

bool BitVec::get(std::size_t i) const {
    if (i >= dim_) throw DimensionMismatch("BitVec index out of range");
    return (words_[i / word_bits] >> (i % word_bits)) & 1U;
}

void BitVec::set(std::size_t i, bool value) {
    if (i >= dim_) throw DimensionMismatch("BitVec index out of range");
    const Word bit = Word{1} << (i % word_bits);
    if (value) {
        words_[i / word_bits] |= bit;
    } else {
        words_[i / word_bits] &= ~bit;
    }
}

void BitVec::flip(std::size_t i) {
    if (i >= dim_) throw DimensionMismatch("BitVec index out of range");
    words_[i / word_bits] ^= Word{1} << (i % word_bits);
}

bool BitVec::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVec::popcount() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::optional<std::size_t> BitVec::first_set() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k] != 0) return k * word_bits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return std::nullopt;
}

std::uint64_t BitVec::to_mask() const {
    if (dim_ > word_bits) throw DimensionMismatch("to_mask supports at most 64 entries");
    return words_.empty() ? 0 : words_[0];
}

bool BitVec::dot(const BitVec& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch("dot of vectors with different dimensions");
    Word acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
}

BitVec BitVec::resized(std::size_t dim) const {
    BitVec v(dim);
    const std::size_t n = std::min(words_.size(), v.words_.size());
    std::copy_n(words_.begin(), n, v.words_.begin());
    if (dim % word_bits != 0 && !v.words_.empty()) v.words_.back() &= (Word{1} << (dim % word_bits)) - 1;
    return v;
}

BitVec BitVec::concat(const BitVec& tail) const {
    BitVec v = resized(dim_ + tail.dim_);
    for (std::size_t i = 0; i < tail.dim_; ++i) {
        if (tail.get(i)) v.set(dim_ + i);
    }
    return v;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (dim_ != other.dim_) throw DimensionMismatch("sum of vectors with different dimensions");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
}

bool operator<(const BitVec& a, const BitVec& b) noexcept {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    for (std::size_t k = a.words_.size(); k-- > 0;) {
        if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
    }
    return false;
}

std::string BitVec::to_string() const {
    std::string s(dim_, '0');
    for (std::size_t i = 0; i < dim_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(v.dim());
    for (BitVec::Word w : v.words()) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<BitVec::Word>{}(w);
    return h;
}

BitMat::BitMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

BitMat BitMat::identity(std::size_t n) {
    BitMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMat BitMat::from_rows(std::span<const BitVec> rows, std::size_t cols) {
    BitMat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitMat BitMat::from_columns(std::span<const BitVec> cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
}

BitMat BitMat::from_strings(std::span<const std::string> rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    BitMat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
        m.set_row(r, BitVec::from_string(rows[r]));
    }
    return m;
}

bool BitMat::get(std::size_t r, std::size_t c) const {
    if (r >= rows_) throw DimensionMismatch("BitMat row out of range");
    return data_[r].get(c);
}

void BitMat::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_) throw DimensionMismatch("BitMat row out of range");
    data_[r].set(c, value);
}

const BitVec& BitMat::row(std::size_t r) const {
    if (r >= rows_) throw DimensionMismatch("BitMat row out of range");
    return data_[r];
}

void BitMat::set_row(std::size_t r, const BitVec& v) {
    if (r >= rows_) throw DimensionMismatch("BitMat row out of range");
    if (v.dim() != cols_) throw DimensionMismatch("row length does not match column count");
    data_[r] = v;
}

BitVec BitMat::column(std::size_t c) const {
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].get(c)) v.set(r);
    }
    return v;
}

std::vector<BitVec> BitMat::columns() const {
    std::vector<BitVec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

BitMat BitMat::transpose() const {
    BitMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const BitVec& row = data_[r];
        for (std::size_t c = 0; c < cols_; ++c) {
            if (row.get(c)) t.data_[c].set(r);
        }
    }
    return t;
}

bool BitMat::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const BitVec& v) { return v.is_zero(); });
}

bool BitMat::is_symmetric() const noexcept {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if (data_[r].get(c) != data_[c].get(r)) return false;
        }
    }
    return true;
}

bool BitMat::form(const BitVec& v, const BitVec& w) const {
    return v.dot((*this) * w);
}

BitVec BitMat::operator*(const BitVec& v) const {
    if (v.dim() != cols_) throw DimensionMismatch("matrix-vector product with mismatched dimension");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].dot(v)) out.set(r);
    }
    return out;
}

BitMat BitMat::operator*(const BitMat& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product with mismatched dimensions");
    BitMat out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        BitVec acc(other.cols_);
        for (std::size_t k = 0; k < cols_; ++k) {
            if (data_[r].get(k)) acc ^= other.data_[k];
        }
        out.data_[r] = std::move(acc);
    }
    return out;
}

BitMat& BitMat::operator+=(const BitMat& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum with mismatched shapes");
    for (std::size_t r = 0; r < rows_; ++r) data_[r] ^= other.data_[r];
    return *this;
}

std::vector<std::string> BitMat::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (const auto& r : data_) out.push_back(r.to_string());
    return out;
}

RowReduction row_reduce(const BitMat& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<BitVec> a;
    std::vector<BitVec> t;
    a.reserve(rows);
    t.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        a.push_back(m.row(r));
        t.push_back(BitVec::unit(rows, r));
    }

    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows; ++c) {
        std::size_t sel = next;
        while (sel < rows && !a[sel].get(c)) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[next]);
        std::swap(t[sel], t[next]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != next && a[r].get(c)) {
                a[r] ^= a[next];
                t[r] ^= t[next];
            }
        }
        pivots.push_back(c);
        ++next;
    }
    return {BitMat::from_rows(a, cols), std::move(pivots), BitMat::from_rows(t, rows)};
}

std::size_t rank(const BitMat& m) {
    std::vector<BitVec> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(m.row(r));
    return rank(a);
}

std::size_t rank(std::span<const BitVec> vectors) {
    std::vector<BitVec> a(vectors.begin(), vectors.end());
    std::size_t r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto lead = a[i].first_set();
        if (!lead) continue;
        ++r;
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[j].get(*lead)) a[j] ^= a[i];
        }
    }
    return r;
}

std::vector<BitVec> kernel_basis(const BitMat& m) {
    const auto red = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(cols);
        v.set(f);
        for (std::size_t i = 0; i < red.pivots.size(); ++i) {
            if (red.rref.get(i, f)) v.set(red.pivots[i]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVec> solve(const BitMat& m, const BitVec& b) {
    if (b.dim() != m.rows()) throw DimensionMismatch("solve: right-hand side has wrong dimension");
    const auto red = row_reduce(m);
    const BitVec tb = red.transform * b;
    for (std::size_t r = red.pivots.size(); r < m.rows(); ++r) {
        if (tb.get(r)) return std::nullopt;
    }
    BitVec x(m.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        if (tb.get(i)) x.set(red.pivots[i]);
    }
    return x;
}

std::optional<BitMat> inverse(const BitMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    auto red = row_reduce(m);
    if (red.pivots.size() != m.rows()) return std::nullopt;
    return std::move(red.transform);
}

std::vector<BitVec> echelon_basis(std::span<const BitVec> vectors, std::size_t dim) {
    for (const auto& v : vectors) {
        if (v.dim() != dim) throw DimensionMismatch("echelon_basis: vector of wrong dimension");
    }
    const auto red = row_reduce(BitMat::from_rows(vectors, dim));
    std::vector<BitVec> out;
    out.reserve(red.pivots.size());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) out.push_back(red.rref.row(i));
    return out;
}

bool in_echelon_span(std::span<const BitVec> echelon, const BitVec& v) {
    BitVec r = v;
    for (const auto& b : echelon) {
        const auto lead = b.first_set();
        if (lead && r.get(*lead)) r ^= b;
    }
    return r.is_zero();
}

std::vector<std::vector<BitVec>> all_subspaces(std::size_t dim) {
    std::vector<std::vector<BitVec>> out;
    for (std::size_t r = 0; r <= dim; ++r) {
        // Pivot sets as increasing index lists, in lexicographic order.
        std::vector<std::size_t> piv(r);
        for (std::size_t i = 0; i < r; ++i) piv[i] = i;
        for (;;) {
            std::vector<bool> is_pivot(dim, false);
            for (std::size_t p : piv) is_pivot[p] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free_slots;
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t c = piv[i] + 1; c < dim; ++c) {
                    if (!is_pivot[c]) free_slots.emplace_back(i, c);
                }
            }
            if (free_slots.size() >= 63) throw Error("all_subspaces: dimension too large");
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_slots.size()); ++mask) {
                std::vector<BitVec> rows;
                rows.reserve(r);
                for (std::size_t i = 0; i < r; ++i) rows.push_back(BitVec::unit(dim, piv[i]));
                for (std::size_t s = 0; s < free_slots.size(); ++s) {
                    if ((mask >> s) & 1U) rows[free_slots[s].first].set(free_slots[s].second);
                }
                out.push_back(std::move(rows));
            }
            // Next combination.
            std::size_t i = r;
            while (i > 0 && piv[i - 1] == dim - r + i - 1) --i;
            if (i == 0) break;
            ++piv[i - 1];
            for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace symroot
