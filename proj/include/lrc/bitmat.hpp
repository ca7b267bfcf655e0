#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/kernels.hpp"
#include "lrc/rng.hpp"

namespace lrc {

// Packed GF(2) vector. Indices are logical bit positions; the word layout is
// internal.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int len) : len_(len), words_(word_count(len), 0) {}

    static BitVector from_indices(int len, const std::vector<int>& ones);
    static BitVector from_string(const std::string& bits);  // "0101..."

    int size() const { return len_; }
    bool get(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        uint64_t mask = 1ULL << (i & 63);
        if (v)
            words_[static_cast<std::size_t>(i) >> 6] |= mask;
        else
            words_[static_cast<std::size_t>(i) >> 6] &= ~mask;
    }
    void flip(int i) { words_[static_cast<std::size_t>(i) >> 6] ^= 1ULL << (i & 63); }

    void xor_with(const BitVector& other);
    int weight() const { return static_cast<int>(kernels::popcount_words(words_.data(), words_.size())); }
    bool is_zero() const { return kernels::is_zero_words(words_.data(), words_.size()); }
    bool dot(const BitVector& other) const;  // GF(2) inner product

    std::vector<int> ones() const;
    std::string to_string() const;

    bool operator==(const BitVector& o) const { return len_ == o.len_ && words_ == o.words_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }
    bool operator<(const BitVector& o) const;  // lexicographic on (len, words)

    uint64_t* words() { return words_.data(); }
    const uint64_t* words() const { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }

    static std::size_t word_count(int len) { return (static_cast<std::size_t>(len) + 63) / 64; }

private:
    int len_ = 0;
    std::vector<uint64_t> words_;
};

// Dense bit-packed GF(2) matrix, row-major. Rows are contiguous word runs so
// row operations reduce to the word kernels.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), stride_(BitVector::word_count(cols)), words_(static_cast<std::size_t>(rows) * stride_, 0) {}

    static BitMatrix identity(int n);
    static BitMatrix from_rows(const std::vector<std::string>& rows);  // "0101..." per row
    static BitMatrix from_dense(const std::vector<std::vector<int>>& entries);
    static BitMatrix from_sparse_rows(int rows, int cols, const std::vector<std::vector<int>>& support);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (row_ptr(r)[static_cast<std::size_t>(c) >> 6] >> (c & 63)) & 1; }
    void set(int r, int c, bool v) {
        uint64_t mask = 1ULL << (c & 63);
        if (v)
            row_ptr(r)[static_cast<std::size_t>(c) >> 6] |= mask;
        else
            row_ptr(r)[static_cast<std::size_t>(c) >> 6] &= ~mask;
    }

    uint64_t* row_ptr(int r) { return words_.data() + static_cast<std::size_t>(r) * stride_; }
    const uint64_t* row_ptr(int r) const { return words_.data() + static_cast<std::size_t>(r) * stride_; }
    std::size_t stride() const { return stride_; }

    void xor_row_into(int src, int dst) { kernels::xor_words(row_ptr(dst), row_ptr(src), stride_); }
    void swap_rows(int a, int b);

    BitVector row(int r) const;
    void set_row(int r, const BitVector& v);
    BitVector column(int c) const;

    int row_weight(int r) const { return static_cast<int>(kernels::popcount_words(row_ptr(r), stride_)); }
    int col_weight(int c) const;
    int max_row_weight() const;
    int max_col_weight() const;

    bool is_zero() const { return kernels::is_zero_words(words_.data(), words_.size()); }
    bool operator==(const BitMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_; }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    BitMatrix transposed() const;
    BitMatrix multiplied_by(const BitMatrix& rhs) const;   // this * rhs
    BitVector multiplied_by(const BitVector& v) const;     // this * v
    static BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
    static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);
    static BitMatrix kron(const BitMatrix& a, const BitMatrix& b);
    BitMatrix columns_selected(const std::vector<int>& cols) const;
    BitMatrix with_appended_column(const BitVector& col) const;
    BitMatrix with_appended_row(const BitVector& row) const;

    std::vector<std::vector<int>> sparse_rows() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<uint64_t> words_;
};

// Row echelon data: `mat` is the reduced matrix, pivot_cols[i] is the column
// of the i-th pivot.
struct Echelon {
    BitMatrix mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

Echelon row_reduce(const BitMatrix& m);

int rank(const BitMatrix& m);

// Basis of the right null space; size = cols - rank.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

// Any x with m*x = s, or nullopt if inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& s);

// Uniformly random element of the row space (random subset XOR of rows).
BitVector random_row_sample(const BitMatrix& m, Rng& rng);

// True iff v is in the row space of m.
bool in_row_space(const BitMatrix& m, const BitVector& v);

// --- text formats ---
// Dense: first line "rows cols", then one 0/1 line per row.
// Sparse ("alist-like"): first line "rows cols", then one line per row of
// 1-based column indices.
std::string write_matrix_dense(const BitMatrix& m);
std::string write_matrix_alist(const BitMatrix& m);
BitMatrix parse_matrix_dense(const std::string& text);
BitMatrix parse_matrix_alist(const std::string& text);
BitMatrix parse_matrix_auto(const std::string& text);  // sniffs dense vs sparse
BitMatrix load_matrix(const std::string& path);
void save_matrix(const BitMatrix& m, const std::string& path, bool sparse = false);

}  // namespace lrc
