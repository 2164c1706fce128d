#include "awd/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace awd {

BitVector BitVector::from_indices(std::size_t length, std::span<const uint32_t> ones) {
    BitVector v(length);
    for (uint32_t i : ones) {
        if (i >= length) throw std::out_of_range("BitVector::from_indices: index past length");
        v.set(i);
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_) throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool BitVector::any() const {
    for (uint64_t w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
}

bool BitVector::dot_parity(const BitVector& other) const {
    if (len_ != other.len_) throw std::invalid_argument("BitVector dot: length mismatch");
    uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::vector<uint32_t> BitVector::ones() const {
    std::vector<uint32_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        uint64_t bits = words_[w];
        while (bits) {
            out.push_back(static_cast<uint32_t>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

void BitVector::reset() { std::fill(words_.begin(), words_.end(), 0); }

SparseBitMatrix SparseBitMatrix::from_entries(
    uint32_t n_rows, uint32_t n_cols,
    std::span<const std::pair<uint32_t, uint32_t>> entries) {
    SparseBitMatrix m(n_rows, n_cols);
    for (auto [r, c] : entries) m.add_entry(r, c);
    return m;
}

void SparseBitMatrix::add_entry(uint32_t row, uint32_t col) {
    if (row >= n_rows_ || col >= n_cols_)
        throw std::out_of_range("SparseBitMatrix::add_entry: coordinate out of range");
    auto& r = rows_[row];
    auto it = std::lower_bound(r.begin(), r.end(), col);
    if (it != r.end() && *it == col)
        throw std::invalid_argument("SparseBitMatrix::add_entry: duplicate coordinate");
    r.insert(it, col);
    auto& c = cols_[col];
    c.insert(std::lower_bound(c.begin(), c.end(), row), row);
    ++nnz_;
}

bool SparseBitMatrix::at(uint32_t row, uint32_t col) const {
    const auto& r = rows_[row];
    return std::binary_search(r.begin(), r.end(), col);
}

SparseBitMatrix SparseBitMatrix::transposed() const {
    SparseBitMatrix t(n_cols_, n_rows_);
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.nnz_ = nnz_;
    return t;
}

BitVector SparseBitMatrix::multiply(const BitVector& v) const {
    if (v.size() != n_cols_)
        throw std::invalid_argument("SparseBitMatrix::multiply: dimension mismatch");
    BitVector y(n_rows_);
    for (uint32_t c = 0; c < n_cols_; ++c) {
        if (!v.get(c)) continue;
        for (uint32_t r : cols_[c]) y.flip(r);
    }
    return y;
}

SparseBitMatrix SparseBitMatrix::select_columns(std::span<const uint32_t> cols) const {
    SparseBitMatrix out(n_rows_, static_cast<uint32_t>(cols.size()));
    for (uint32_t j = 0; j < cols.size(); ++j) {
        for (uint32_t r : cols_[cols[j]]) out.add_entry(r, j);
    }
    return out;
}

namespace {

// Dense bit-row workspace used during elimination.
struct DenseRows {
    std::size_t width;
    std::size_t words;
    std::vector<uint64_t> data;

    DenseRows(std::size_t n_rows, std::size_t w)
        : width(w), words((w + 63) / 64), data(n_rows * words, 0) {}

    uint64_t* row(std::size_t r) { return data.data() + r * words; }
    bool get(std::size_t r, std::size_t c) const {
        return (data[r * words + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c) {
        data[r * words + (c >> 6)] |= uint64_t(1) << (c & 63);
    }
    void xor_rows(std::size_t dst, std::size_t src) {
        uint64_t* d = row(dst);
        const uint64_t* s = data.data() + src * words;
        for (std::size_t w = 0; w < words; ++w) d[w] ^= s[w];
    }
};

}  // namespace

EliminationResult eliminate(const SparseBitMatrix& m, std::span<const uint32_t> column_order) {
    const uint32_t nr = m.n_rows();
    const uint32_t nc = m.n_cols();
    {
        std::vector<bool> seen(nc, false);
        for (uint32_t c : column_order) {
            if (c >= nc) throw std::out_of_range("eliminate: column index out of range");
            if (seen[c]) throw std::invalid_argument("eliminate: repeated column in order");
            seen[c] = true;
        }
    }

    DenseRows rows(nr, nc);
    for (uint32_t r = 0; r < nr; ++r)
        for (uint32_t c : m.row(r)) rows.set(r, c);
    DenseRows tf(nr, nr);
    for (uint32_t r = 0; r < nr; ++r) tf.set(r, r);

    EliminationResult res;
    res.n_rows = nr;
    res.n_cols = nc;
    std::vector<bool> row_used(nr, false);

    for (uint32_t c : column_order) {
        uint32_t pivot = nr;
        for (uint32_t r = 0; r < nr; ++r) {
            if (!row_used[r] && rows.get(r, c)) { pivot = r; break; }
        }
        if (pivot == nr) continue;
        row_used[pivot] = true;
        res.pivot_cols.push_back(c);
        res.pivot_rows.push_back(pivot);
        for (uint32_t r = 0; r < nr; ++r) {
            if (r != pivot && rows.get(r, c)) {
                rows.xor_rows(r, pivot);
                tf.xor_rows(r, pivot);
            }
        }
    }

    res.transform.reserve(nr);
    for (uint32_t r = 0; r < nr; ++r) {
        BitVector t(nr);
        for (uint32_t c = 0; c < nr; ++c)
            if (tf.get(r, c)) t.set(c);
        res.transform.push_back(std::move(t));
        if (!row_used[r]) res.free_rows.push_back(r);
    }
    return res;
}

EliminationResult eliminate(const SparseBitMatrix& m) {
    std::vector<uint32_t> order(m.n_cols());
    std::iota(order.begin(), order.end(), 0);
    return eliminate(m, order);
}

std::optional<BitVector> EliminationResult::solve(const BitVector& s) const {
    if (s.size() != n_rows)
        throw std::invalid_argument("EliminationResult::solve: syndrome length mismatch");
    // t = T s; consistency requires t to vanish on all pivot-free rows.
    for (uint32_t r : free_rows)
        if (transform[r].dot_parity(s)) return std::nullopt;
    BitVector e(n_cols);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        if (transform[pivot_rows[i]].dot_parity(s)) e.set(pivot_cols[i]);
    return e;
}

std::size_t gf2_rank(const SparseBitMatrix& m) { return eliminate(m).rank(); }

std::optional<BitVector> gf2_solve(const SparseBitMatrix& m, const BitVector& s) {
    if (s.size() != m.n_rows())
        throw std::invalid_argument("gf2_solve: syndrome length must equal n_rows");
    return eliminate(m).solve(s);
}

bool RowBasis::add_row(BitVector row) {
    if (row.size() != width_) throw std::invalid_argument("RowBasis::add_row: width mismatch");
    // Stored rows are kept mutually reduced, so one pass suffices here.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (row.get(leading_cols_[i])) row ^= rows_[i];
    auto lead = row.ones();
    if (lead.empty()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(lead.front())) rows_[i] ^= row;
    leading_cols_.push_back(lead.front());
    rows_.push_back(std::move(row));
    return true;
}

}  // namespace awd
