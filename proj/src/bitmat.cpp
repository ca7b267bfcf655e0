#include "lrc/bitmat.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lrc/errors.hpp"

namespace lrc {

BitVector BitVector::from_indices(int len, const std::vector<int>& ones) {
    BitVector v(len);
    for (int i : ones) {
        if (i < 0 || i >= len) throw DimensionError("bit index out of range");
        v.set(i, true);
    }
    return v;
}

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(static_cast<int>(i), true);
        else if (bits[i] != '0')
            throw ParseError("expected 0/1", 1, static_cast<int>(i) + 1);
    }
    return v;
}

void BitVector::xor_with(const BitVector& other) {
    if (other.len_ != len_) throw DimensionError("BitVector xor length mismatch");
    kernels::xor_words(words_.data(), other.words_.data(), words_.size());
}

bool BitVector::dot(const BitVector& other) const {
    if (other.len_ != len_) throw DimensionError("BitVector dot length mismatch");
    return kernels::parity_and_words(words_.data(), other.words_.data(), words_.size());
}

std::vector<int> BitVector::ones() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        uint64_t bits = words_[w];
        while (bits) {
            int b = __builtin_ctzll(bits);
            out.push_back(static_cast<int>(w * 64) + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i : ones()) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

bool BitVector::operator<(const BitVector& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    return words_ < o.words_;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    BitMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw DimensionError("ragged rows in BitMatrix::from_rows");
        for (int j = 0; j < c; ++j)
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == '1') m.set(i, j, true);
    }
    return m;
}

BitMatrix BitMatrix::from_dense(const std::vector<std::vector<int>>& entries) {
    int r = static_cast<int>(entries.size());
    int c = r == 0 ? 0 : static_cast<int>(entries[0].size());
    BitMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(entries[static_cast<std::size_t>(i)].size()) != c)
            throw DimensionError("ragged rows in BitMatrix::from_dense");
        for (int j = 0; j < c; ++j)
            if (entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1) m.set(i, j, true);
    }
    return m;
}

BitMatrix BitMatrix::from_sparse_rows(int rows, int cols, const std::vector<std::vector<int>>& support) {
    if (static_cast<int>(support.size()) != rows) throw DimensionError("sparse row count mismatch");
    BitMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j : support[static_cast<std::size_t>(i)]) {
            if (j < 0 || j >= cols) throw DimensionError("sparse column index out of range");
            m.set(i, j, true);
        }
    return m;
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    std::swap_ranges(row_ptr(a), row_ptr(a) + stride_, row_ptr(b));
}

BitVector BitMatrix::row(int r) const {
    BitVector v(cols_);
    std::copy(row_ptr(r), row_ptr(r) + stride_, v.words());
    return v;
}

void BitMatrix::set_row(int r, const BitVector& v) {
    if (v.size() != cols_) throw DimensionError("set_row length mismatch");
    std::copy(v.words(), v.words() + stride_, row_ptr(r));
}

BitVector BitMatrix::column(int c) const {
    BitVector v(rows_);
    for (int r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

int BitMatrix::col_weight(int c) const {
    int w = 0;
    for (int r = 0; r < rows_; ++r) w += get(r, c) ? 1 : 0;
    return w;
}

int BitMatrix::max_row_weight() const {
    int best = 0;
    for (int r = 0; r < rows_; ++r) best = std::max(best, row_weight(r));
    return best;
}

int BitMatrix::max_col_weight() const {
    std::vector<int> w(static_cast<std::size_t>(cols_), 0);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = row_ptr(r);
        for (std::size_t wd = 0; wd < stride_; ++wd) {
            uint64_t bits = p[wd];
            while (bits) {
                int b = __builtin_ctzll(bits);
                ++w[wd * 64 + static_cast<std::size_t>(b)];
                bits &= bits - 1;
            }
        }
    }
    int best = 0;
    for (int x : w) best = std::max(best, x);
    return best;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = row_ptr(r);
        for (std::size_t wd = 0; wd < stride_; ++wd) {
            uint64_t bits = p[wd];
            while (bits) {
                int b = __builtin_ctzll(bits);
                t.set(static_cast<int>(wd * 64) + b, r, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::multiplied_by(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product dimension mismatch");
    BitMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        const uint64_t* p = row_ptr(r);
        for (std::size_t wd = 0; wd < stride_; ++wd) {
            uint64_t bits = p[wd];
            while (bits) {
                int b = __builtin_ctzll(bits);
                int k = static_cast<int>(wd * 64) + b;
                kernels::xor_words(out.row_ptr(r), rhs.row_ptr(k), out.stride_);
                bits &= bits - 1;
            }
        }
    }
    return out;
}

BitVector BitMatrix::multiplied_by(const BitVector& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
    BitVector out(rows_);
    for (int r = 0; r < rows_; ++r)
        if (kernels::parity_and_words(row_ptr(r), v.words(), stride_)) out.set(r, true);
    return out;
}

BitMatrix BitMatrix::hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_) throw DimensionError("hstack row mismatch");
    BitMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int c = 0; c < a.cols_; ++c)
            if (a.get(r, c)) out.set(r, c, true);
        for (int c = 0; c < b.cols_; ++c)
            if (b.get(r, c)) out.set(r, a.cols_ + c, true);
    }
    return out;
}

BitMatrix BitMatrix::vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.cols_) throw DimensionError("vstack column mismatch");
    BitMatrix out(a.rows_ + b.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) std::copy(a.row_ptr(r), a.row_ptr(r) + a.stride_, out.row_ptr(r));
    for (int r = 0; r < b.rows_; ++r) std::copy(b.row_ptr(r), b.row_ptr(r) + b.stride_, out.row_ptr(a.rows_ + r));
    return out;
}

BitMatrix BitMatrix::kron(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int ar = 0; ar < a.rows_; ++ar)
        for (int ac = 0; ac < a.cols_; ++ac) {
            if (!a.get(ar, ac)) continue;
            for (int br = 0; br < b.rows_; ++br)
                for (int bc = 0; bc < b.cols_; ++bc)
                    if (b.get(br, bc)) out.set(ar * b.rows_ + br, ac * b.cols_ + bc, true);
        }
    return out;
}

BitMatrix BitMatrix::columns_selected(const std::vector<int>& cols) const {
    BitMatrix out(rows_, static_cast<int>(cols.size()));
    for (int r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (get(r, cols[j])) out.set(r, static_cast<int>(j), true);
    return out;
}

BitMatrix BitMatrix::with_appended_column(const BitVector& col) const {
    if (col.size() != rows_) throw DimensionError("appended column length mismatch");
    BitMatrix out(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        std::copy(row_ptr(r), row_ptr(r) + stride_, out.row_ptr(r));
        if (col.get(r)) out.set(r, cols_, true);
    }
    return out;
}

BitMatrix BitMatrix::with_appended_row(const BitVector& row) const {
    if (row.size() != cols_) throw DimensionError("appended row length mismatch");
    BitMatrix out(rows_ + 1, cols_);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    out.set_row(rows_, row);
    return out;
}

std::vector<std::vector<int>> BitMatrix::sparse_rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = row(r).ones();
    return out;
}

Echelon row_reduce(const BitMatrix& m) {
    Echelon e;
    e.mat = m;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (e.mat.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        e.mat.swap_rows(r, piv);
        for (int i = 0; i < m.rows(); ++i)
            if (i != r && e.mat.get(i, c)) e.mat.xor_row_into(r, i);
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

int rank(const BitMatrix& m) { return row_reduce(m).rank; }

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<BitVector> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        BitVector v(m.cols());
        v.set(f, true);
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            if (e.mat.get(static_cast<int>(i), f)) v.set(e.pivot_cols[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& s) {
    if (s.size() != m.rows()) throw DimensionError("solve: syndrome length mismatch");
    // Eliminate on [m | s].
    BitMatrix aug = m.with_appended_column(s);
    int r = 0;
    std::vector<int> pivot_cols;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (aug.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        aug.swap_rows(r, piv);
        for (int i = 0; i < m.rows(); ++i)
            if (i != r && aug.get(i, c)) aug.xor_row_into(r, i);
        pivot_cols.push_back(c);
        ++r;
    }
    for (int i = r; i < m.rows(); ++i)
        if (aug.get(i, m.cols())) return std::nullopt;
    BitVector x(m.cols());
    for (int i = 0; i < r; ++i)
        if (aug.get(i, m.cols())) x.set(pivot_cols[static_cast<std::size_t>(i)], true);
    return x;
}

BitVector random_row_sample(const BitMatrix& m, Rng& rng) {
    BitVector v(m.cols());
    for (int r = 0; r < m.rows(); ++r)
        if (rng() & 1) kernels::xor_words(v.words(), m.row_ptr(r), m.stride());
    return v;
}

bool in_row_space(const BitMatrix& m, const BitVector& v) {
    // v in rowspace(m) iff appending v does not raise the rank; equivalently
    // the transposed system m^T x = v is solvable.
    return solve(m.transposed(), v).has_value();
}

std::string write_matrix_dense(const BitMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (int r = 0; r < m.rows(); ++r) out << m.row(r).to_string() << '\n';
    return out.str();
}

std::string write_matrix_alist(const BitMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (int r = 0; r < m.rows(); ++r) {
        auto ones = m.row(r).ones();
        for (std::size_t i = 0; i < ones.size(); ++i) {
            if (i) out << ' ';
            out << ones[i] + 1;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;
    explicit LineReader(const std::string& text) : in(text) {}
    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            // skip blank and comment lines
            std::size_t p = line.find_first_not_of(" \t");
            if (p == std::string::npos) continue;
            if (line[p] == '#') continue;
            return true;
        }
        return false;
    }
};

void parse_header(const std::string& line, int line_no, int& rows, int& cols) {
    std::istringstream hs(line);
    if (!(hs >> rows >> cols) || rows < 0 || cols < 0) throw ParseError("expected header \"rows cols\"", line_no, 1);
    std::string trailing;
    if (hs >> trailing) throw ParseError("unexpected token after header", line_no, 1);
}

}  // namespace

BitMatrix parse_matrix_dense(const std::string& text) {
    LineReader rd(text);
    std::string line;
    if (!rd.next(line)) throw ParseError("empty matrix text", 1, 1);
    int rows = 0, cols = 0;
    parse_header(line, rd.line_no, rows, cols);
    BitMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!rd.next(line)) throw ParseError("missing matrix row", rd.line_no + 1, 1);
        if (static_cast<int>(line.size()) != cols)
            throw ParseError("row has wrong length", rd.line_no, static_cast<int>(line.size()) + 1);
        for (int c = 0; c < cols; ++c) {
            char ch = line[static_cast<std::size_t>(c)];
            if (ch == '1')
                m.set(r, c, true);
            else if (ch != '0')
                throw ParseError("expected 0/1", rd.line_no, c + 1);
        }
    }
    return m;
}

BitMatrix parse_matrix_alist(const std::string& text) {
    LineReader rd(text);
    std::string line;
    if (!rd.next(line)) throw ParseError("empty matrix text", 1, 1);
    int rows = 0, cols = 0;
    parse_header(line, rd.line_no, rows, cols);
    BitMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!rd.next(line)) throw ParseError("missing matrix row", rd.line_no + 1, 1);
        std::istringstream ls(line);
        long idx = 0;
        while (ls >> idx) {
            if (idx < 1 || idx > cols) throw ParseError("column index out of range", rd.line_no, 1);
            m.set(r, static_cast<int>(idx) - 1, true);
        }
        if (!ls.eof()) throw ParseError("expected integer column index", rd.line_no, 1);
    }
    return m;
}

BitMatrix parse_matrix_auto(const std::string& text) {
    LineReader rd(text);
    std::string header, first;
    if (!rd.next(header)) throw ParseError("empty matrix text", 1, 1);
    int rows = 0, cols = 0;
    parse_header(header, rd.line_no, rows, cols);
    if (rows == 0) return BitMatrix(0, cols);
    if (!rd.next(first)) throw ParseError("missing matrix row", rd.line_no + 1, 1);
    bool dense = static_cast<int>(first.size()) == cols &&
                 first.find_first_not_of("01") == std::string::npos;
    // 1-column sparse rows like "1" are also valid dense text for cols==1;
    // dense wins the tie, which round-trips both writers.
    return dense ? parse_matrix_dense(text) : parse_matrix_alist(text);
}

BitMatrix load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_auto(buf.str());
}

void save_matrix(const BitMatrix& m, const std::string& path, bool sparse) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write matrix file: " + path);
    out << (sparse ? write_matrix_alist(m) : write_matrix_dense(m));
}

}  // namespace lrc
