#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace awd {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : len_(length), words_((length + 63) / 64, 0) {}

    static BitVector from_indices(std::size_t length, std::span<const uint32_t> ones);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void clear(std::size_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }
    void assign(std::size_t i, bool v) { v ? set(i) : clear(i); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }

    bool operator==(const BitVector&) const = default;

    bool any() const;
    std::size_t popcount() const;
    /// Parity of the AND of two equal-length vectors (GF(2) dot product).
    bool dot_parity(const BitVector& other) const;

    std::vector<uint32_t> ones() const;
    void reset();

private:
    std::size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// Sparse binary matrix stored as sorted adjacency lists for both rows and
/// columns, so row iteration and column iteration are both O(nnz of that
/// line). Coordinates are unique; add_entry on an existing coordinate throws.
class SparseBitMatrix {
public:
    SparseBitMatrix() = default;
    SparseBitMatrix(uint32_t n_rows, uint32_t n_cols)
        : n_rows_(n_rows), n_cols_(n_cols), rows_(n_rows), cols_(n_cols) {}

    static SparseBitMatrix from_entries(uint32_t n_rows, uint32_t n_cols,
                                        std::span<const std::pair<uint32_t, uint32_t>> entries);

    uint32_t n_rows() const { return n_rows_; }
    uint32_t n_cols() const { return n_cols_; }
    std::size_t nnz() const { return nnz_; }

    void add_entry(uint32_t row, uint32_t col);

    const std::vector<uint32_t>& row(uint32_t r) const { return rows_[r]; }
    const std::vector<uint32_t>& col(uint32_t c) const { return cols_[c]; }

    bool at(uint32_t row, uint32_t col) const;

    SparseBitMatrix transposed() const;

    /// y = M v (v indexed by columns, y by rows).
    BitVector multiply(const BitVector& v) const;

    /// Keep the given columns (in the given order); rows keep their indices.
    SparseBitMatrix select_columns(std::span<const uint32_t> cols) const;

    bool operator==(const SparseBitMatrix&) const = default;

private:
    uint32_t n_rows_ = 0;
    uint32_t n_cols_ = 0;
    std::size_t nnz_ = 0;
    std::vector<std::vector<uint32_t>> rows_;
    std::vector<std::vector<uint32_t>> cols_;
};

/// Result of Gaussian elimination with a caller-supplied column priority.
/// Pivot columns are chosen greedily in the given order; `transform` is the
/// row transform T with T*M in reduced form, kept so any syndrome can be
/// solved by back-substitution afterwards.
struct EliminationResult {
    uint32_t n_rows = 0;
    uint32_t n_cols = 0;
    std::vector<uint32_t> pivot_cols;
    std::vector<uint32_t> pivot_rows;   // pivot_rows[i] carries pivot_cols[i]
    std::vector<uint32_t> free_rows;    // rows without a pivot
    std::vector<BitVector> transform;   // T, one bit row per matrix row

    std::size_t rank() const { return pivot_cols.size(); }

    /// Solve M e = s for the eliminated M. Returns a solution supported on
    /// the pivot columns, or nullopt when s is outside the column space
    /// spanned by the ordered columns.
    std::optional<BitVector> solve(const BitVector& s) const;
};

EliminationResult eliminate(const SparseBitMatrix& m, std::span<const uint32_t> column_order);
EliminationResult eliminate(const SparseBitMatrix& m);  // natural column order

std::size_t gf2_rank(const SparseBitMatrix& m);

/// Any e with M e = s, or nullopt when s is outside the column space.
/// Throws std::invalid_argument on dimension mismatch.
std::optional<BitVector> gf2_solve(const SparseBitMatrix& m, const BitVector& s);

/// Incremental GF(2) row span tracker: add_row returns true when the row was
/// independent of everything added before.
class RowBasis {
public:
    explicit RowBasis(std::size_t width) : width_(width) {}
    bool add_row(BitVector row);
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t width_;
    std::vector<BitVector> rows_;         // reduced rows
    std::vector<uint32_t> leading_cols_;  // leading column of each reduced row
};

}  // namespace awd
