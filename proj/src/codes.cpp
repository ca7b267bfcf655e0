#include "lrc/codes.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "lrc/errors.hpp"

namespace lrc {

namespace {

int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

int elem_id(const RingDesc& ring, int x, int y) { return mod(x, ring.l) * ring.m + mod(y, ring.m); }

void normalize(RingElem& e) {
    std::sort(e.terms.begin(), e.terms.end());
    // pairs cancel mod 2
    std::vector<int> out;
    for (std::size_t i = 0; i < e.terms.size();) {
        std::size_t j = i;
        while (j < e.terms.size() && e.terms[j] == e.terms[i]) ++j;
        if ((j - i) & 1) out.push_back(e.terms[i]);
        i = j;
    }
    e.terms = std::move(out);
}

}  // namespace

RingElem ring_monomial(const RingDesc& ring, int xpow, int ypow) {
    RingElem e;
    e.terms.push_back(elem_id(ring, xpow, ypow));
    return e;
}

RingElem ring_add(const RingDesc&, const RingElem& a, const RingElem& b) {
    RingElem e;
    e.terms = a.terms;
    e.terms.insert(e.terms.end(), b.terms.begin(), b.terms.end());
    normalize(e);
    return e;
}

RingElem ring_mul(const RingDesc& ring, const RingElem& a, const RingElem& b) {
    RingElem e;
    for (int ta : a.terms)
        for (int tb : b.terms) {
            int x = ta / ring.m + tb / ring.m;
            int y = ta % ring.m + tb % ring.m;
            e.terms.push_back(elem_id(ring, x, y));
        }
    normalize(e);
    return e;
}

RingElem ring_antipode(const RingDesc& ring, const RingElem& a) {
    RingElem e;
    for (int t : a.terms) e.terms.push_back(elem_id(ring, -(t / ring.m), -(t % ring.m)));
    normalize(e);
    return e;
}

RingElem parse_ring_poly(const RingDesc& ring, const std::string& text) {
    RingElem out;
    std::string term;
    auto flush = [&](const std::string& t) {
        if (t.empty()) throw ParseError("empty term in ring polynomial", 1, 1);
        int xp = 0, yp = 0;
        std::size_t i = 0;
        if (t == "1") {
            out = ring_add(ring, out, ring_monomial(ring, 0, 0));
            return;
        }
        while (i < t.size()) {
            char v = t[i];
            if (v != 'x' && v != 'y') throw ParseError("expected x or y in ring polynomial", 1, static_cast<int>(i) + 1);
            ++i;
            if (i < t.size() && t[i] == '^') ++i;
            int p = 1;
            if (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
                p = 0;
                while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
                    p = p * 10 + (t[i] - '0');
                    ++i;
                }
            }
            if (v == 'x')
                xp += p;
            else
                yp += p;
        }
        out = ring_add(ring, out, ring_monomial(ring, xp, yp));
    };
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '+') {
            flush(term);
            term.clear();
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            term.push_back(text[i]);
        }
    }
    return out;
}

BitMatrix ring_lift(const RingDesc& ring, const RingElem& a) {
    int ord = ring.order();
    BitMatrix m(ord, ord);
    for (int g = 0; g < ord; ++g) {
        int gx = g / ring.m, gy = g % ring.m;
        for (int t : a.terms) m.set(g, elem_id(ring, gx + t / ring.m, gy + t % ring.m), true);
    }
    return m;
}

Protograph Protograph::from_binary(const BitMatrix& b) {
    Protograph p(RingDesc{1, 1}, b.rows(), b.cols());
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) p.at(r, c).terms = {0};
    return p;
}

Protograph proto_kron(const Protograph& a, const Protograph& b) {
    if (!(a.ring == b.ring)) throw RingError("protograph kron over different rings");
    Protograph out(a.ring, a.rows * b.rows, a.cols * b.cols);
    for (int ar = 0; ar < a.rows; ++ar)
        for (int ac = 0; ac < a.cols; ++ac) {
            const RingElem& e = a.at(ar, ac);
            if (e.is_zero()) continue;
            for (int br = 0; br < b.rows; ++br)
                for (int bc = 0; bc < b.cols; ++bc) {
                    if (b.at(br, bc).is_zero()) continue;
                    out.at(ar * b.rows + br, ac * b.cols + bc) = ring_mul(a.ring, e, b.at(br, bc));
                }
        }
    return out;
}

Protograph proto_identity(const RingDesc& ring, int n) {
    Protograph p(ring, n, n);
    for (int i = 0; i < n; ++i) p.at(i, i) = ring_monomial(ring, 0, 0);
    return p;
}

Protograph proto_transpose(const Protograph& p) {
    Protograph out(p.ring, p.cols, p.rows);
    for (int r = 0; r < p.rows; ++r)
        for (int c = 0; c < p.cols; ++c) out.at(c, r) = ring_antipode(p.ring, p.at(r, c));
    return out;
}

BitMatrix proto_lift(const Protograph& p) {
    int ord = p.ring.order();
    BitMatrix out(p.rows * ord, p.cols * ord);
    for (int r = 0; r < p.rows; ++r)
        for (int c = 0; c < p.cols; ++c) {
            const RingElem& e = p.at(r, c);
            if (e.is_zero()) continue;
            BitMatrix blk = ring_lift(p.ring, e);
            // audit: regular representations are weight-balanced by
            // construction; a violation means a broken ring element
            int w = static_cast<int>(e.terms.size());
            if (blk.max_row_weight() != w || blk.max_col_weight() != w)
                throw RingError("ring element lift is not weight-balanced");
            for (int br = 0; br < ord; ++br)
                for (int bc = 0; bc < ord; ++bc)
                    if (blk.get(br, bc)) out.set(r * ord + br, c * ord + bc, true);
        }
    return out;
}

ProtoWeights proto_weights(const Protograph& p) {
    ProtoWeights pw;
    pw.w.assign(static_cast<std::size_t>(p.rows), std::vector<int>(static_cast<std::size_t>(p.cols), 0));
    for (int r = 0; r < p.rows; ++r)
        for (int c = 0; c < p.cols; ++c) pw.w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(p.at(r, c).terms.size());
    for (int r = 0; r < p.rows; ++r) {
        int s = 0;
        for (int c = 0; c < p.cols; ++c) s += pw.w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        pw.max_row_sum = std::max(pw.max_row_sum, s);
    }
    for (int c = 0; c < p.cols; ++c) {
        int s = 0;
        for (int r = 0; r < p.rows; ++r) s += pw.w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        pw.max_col_sum = std::max(pw.max_col_sum, s);
    }
    return pw;
}

namespace {

// Incrementally tracked row space; add() reports whether the vector enlarged it.
class RankTracker {
public:
    bool add(BitVector v) {
        for (auto& [piv, row] : rows_) {
            if (v.get(piv)) v.xor_with(row);
        }
        auto ones = v.ones();
        if (ones.empty()) return false;
        rows_.emplace_back(ones[0], std::move(v));
        return true;
    }

private:
    std::vector<std::pair<int, BitVector>> rows_;
};

// Representatives of ker(checks) / rowspace(stabs).
std::vector<BitVector> logical_representatives(const BitMatrix& checks, const BitMatrix& stabs, int expect) {
    RankTracker tracker;
    for (int r = 0; r < stabs.rows(); ++r) tracker.add(stabs.row(r));
    std::vector<BitVector> reps;
    for (auto& v : kernel_basis(checks)) {
        BitVector copy = v;
        if (tracker.add(std::move(copy))) reps.push_back(std::move(v));
        if (static_cast<int>(reps.size()) == expect) break;
    }
    return reps;
}

BitMatrix rows_to_matrix(const std::vector<BitVector>& rows, int cols) {
    BitMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
    return m;
}

BitMatrix gf2_inverse(const BitMatrix& m) {
    int n = m.rows();
    BitMatrix aug = BitMatrix::hstack(m, BitMatrix::identity(n));
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (aug.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) throw Error("gf2_inverse: singular matrix");
        aug.swap_rows(r, piv);
        for (int i = 0; i < n; ++i)
            if (i != r && aug.get(i, c)) aug.xor_row_into(r, i);
        ++r;
    }
    BitMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (aug.get(i, n + j)) inv.set(i, j, true);
    return inv;
}

}  // namespace

CssCode new_css(BitMatrix hx, BitMatrix hz, std::string name) {
    if (hx.cols() != hz.cols()) throw DimensionError("hx and hz must have the same number of columns");
    BitMatrix prod = hx.multiplied_by(hz.transposed());
    if (!prod.is_zero()) throw CommutationError("hx * hz^T != 0");

    CssCode code;
    code.n = hx.cols();
    int rx = rank(hx);
    int rz = rank(hz);
    code.k = code.n - rx - rz;
    code.name = std::move(name);

    if (code.k > 0) {
        // lz in ker(hx) mod rowspace(hz); lx in ker(hz) mod rowspace(hx)
        auto lz_raw = logical_representatives(hx, hz, code.k);
        auto lx_raw = logical_representatives(hz, hx, code.k);
        if (static_cast<int>(lz_raw.size()) != code.k || static_cast<int>(lx_raw.size()) != code.k)
            throw Error("logical basis extraction failed");
        BitMatrix lzm = rows_to_matrix(lz_raw, code.n);
        BitMatrix lxm = rows_to_matrix(lx_raw, code.n);
        // normalise lx so that lx * lz^T = I
        BitMatrix pairing = lxm.multiplied_by(lzm.transposed());
        BitMatrix fix = gf2_inverse(pairing);
        code.lx = fix.multiplied_by(lxm);
        code.lz = lzm;
    } else {
        code.lx = BitMatrix(0, code.n);
        code.lz = BitMatrix(0, code.n);
    }
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    return code;
}

DegreeStats degree_stats(const CssCode& code) {
    DegreeStats s;
    s.r_hx = code.hx.max_row_weight();
    s.c_hx = code.hx.max_col_weight();
    s.r_hz = code.hz.max_row_weight();
    s.c_hz = code.hz.max_col_weight();
    s.r_hxz = std::max(s.r_hx, s.r_hz);
    int c_stack = 0;
    for (int c = 0; c < code.n; ++c) c_stack = std::max(c_stack, code.hx.col_weight(c) + code.hz.col_weight(c));
    s.c_hxz = c_stack;
    s.delta_hxz = std::max(s.r_hxz, s.c_hxz);
    return s;
}

CssCode lifted_product(const Protograph& c, const Protograph& d, std::string name) {
    if (!(c.ring == d.ring)) throw RingError("lifted product protographs must share a ring");
    Protograph hx_proto = proto_kron(c, proto_identity(c.ring, d.rows));
    Protograph hx_right = proto_kron(proto_identity(c.ring, c.rows), d);
    Protograph hz_left = proto_kron(proto_identity(c.ring, c.cols), proto_transpose(d));
    Protograph hz_right = proto_kron(proto_transpose(c), proto_identity(c.ring, d.cols));
    BitMatrix hx = BitMatrix::hstack(proto_lift(hx_proto), proto_lift(hx_right));
    BitMatrix hz = BitMatrix::hstack(proto_lift(hz_left), proto_lift(hz_right));
    CssCode code = new_css(std::move(hx), std::move(hz), std::move(name));
    code.natural_left = c.cols * d.rows * c.ring.order();
    return code;
}

CssCode hgp(const BitMatrix& a, const BitMatrix& b, std::string name) {
    // standard hypergraph product, expressed as the lifted product of the
    // trivial-ring protographs (a, b^T)
    return lifted_product(Protograph::from_binary(a), Protograph::from_binary(b.transposed()),
                          std::move(name));
}

CssCode bivariate_bicycle(int l, int m, const std::string& a_poly, const std::string& b_poly, std::string name) {
    RingDesc ring{l, m};
    Protograph c(ring, 1, 1), d(ring, 1, 1);
    c.at(0, 0) = parse_ring_poly(ring, a_poly);
    d.at(0, 0) = parse_ring_poly(ring, b_poly);
    return lifted_product(c, d, std::move(name));
}

CssCode fiber_bundle(const TwistSpec& t, const BitMatrix& f, std::string name) {
    int l = t.fibre_len;
    if (f.rows() != l || f.cols() != l) throw DimensionError("fibre matrix must be fibre_len x fibre_len");
    int mb = t.rows(), nb = t.cols();
    RingDesc ring{l, 1};
    RingElem x1 = ring_monomial(ring, t.transpose_shift ? -1 : 1);
    BitMatrix shift = ring_lift(ring, x1);

    // twisted left block: (i,j) -> S^{T_ij}
    BitMatrix twisted(mb * l, nb * l);
    for (int i = 0; i < mb; ++i)
        for (int j = 0; j < nb; ++j) {
            int p = t.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (p < 0) continue;
            if (p >= l) throw DimensionError("twist power must be < fibre length");
            BitMatrix blk = ring_lift(ring, ring_monomial(ring, t.transpose_shift ? -p : p));
            for (int br = 0; br < l; ++br)
                for (int bc = 0; bc < l; ++bc)
                    if (blk.get(br, bc)) twisted.set(i * l + br, j * l + bc, true);
        }

    BitMatrix hx = BitMatrix::hstack(twisted, BitMatrix::kron(BitMatrix::identity(mb), f));
    BitMatrix hz = BitMatrix::hstack(BitMatrix::kron(BitMatrix::identity(nb), f.transposed()), twisted.transposed());
    CssCode code = new_css(std::move(hx), std::move(hz), std::move(name));
    code.natural_left = nb * l;
    return code;
}

std::pair<Protograph, Protograph> fb_to_lifted_product(const TwistSpec& t, const RingElem& f_poly) {
    RingDesc ring{t.fibre_len, 1};
    Protograph c(ring, t.rows(), t.cols());
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j) {
            int p = t.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (p >= 0) c.at(i, j) = ring_monomial(ring, t.transpose_shift ? -p : p);
        }
    Protograph d(ring, 1, 1);
    d.at(0, 0) = f_poly;
    return {c, d};
}

BitMatrix repetition_checks(int d) {
    BitMatrix m(d - 1, d);
    for (int i = 0; i + 1 < d; ++i) {
        m.set(i, i, true);
        m.set(i, i + 1, true);
    }
    return m;
}

BitMatrix repetition_ring_checks(int d) {
    RingDesc ring{d, 1};
    return ring_lift(ring, parse_ring_poly(ring, "1+x"));
}

BitMatrix hamming_7_4_checks() {
    // columns are the binary expansions of 1..7
    BitMatrix m(3, 7);
    for (int c = 0; c < 7; ++c) {
        int v = c + 1;
        for (int b = 0; b < 3; ++b)
            if (v & (1 << b)) m.set(b, c, true);
    }
    return m;
}

CssCode steane() {
    BitMatrix h = hamming_7_4_checks();
    return new_css(h, h, "steane");
}

CssCode rep_code(int d) {
    BitMatrix hz = repetition_checks(d);
    BitMatrix hx(0, d);
    return new_css(hx, hz, "rep" + std::to_string(d));
}

CssCode gross_code() { return bivariate_bicycle(12, 6, "x^3+y+y^2", "y^3+x+x^2", "gross"); }

TwistSpec fb126_twists() {
    TwistSpec t;
    t.fibre_len = 9;
    t.t = {
        {1, 1, -1, 5, 0, -1, -1},
        {-1, -1, 4, 3, 2, -1, 3},
        {5, -1, 2, -1, 1, 0, -1},
        {7, -1, -1, 7, -1, 0, 4},
        {8, 5, 8, -1, -1, -1, 2},
        {-1, 6, 4, 3, -1, 1, -1},
        {-1, 8, -1, -1, 0, 6, 2},
    };
    return t;
}

CssCode fb126() {
    TwistSpec t = fb126_twists();
    RingDesc ring{9, 1};
    BitMatrix f = ring_lift(ring, parse_ring_poly(ring, "1+x"));
    return fiber_bundle(t, f, "fb126");
}

BitMatrix hgp625_seed() {
    // (3,4)-regular [20,5,8] seed; hgp of it with itself is [[625,25,8]]
    static const std::vector<std::string> rows = {
        "10100000001000100000", "00000000101001001000", "10000001100010000000", "10001000010000000010",
        "00000100010001001000", "00001000000100001100", "00000001000010010001", "00100010000010010000",
        "00000000010100100001", "00110000000000000110", "00000000000100010110", "01010001100000000000",
        "01000110000000000001", "00011010001000000000", "01000100000001100000",
    };
    return BitMatrix::from_rows(rows);
}

CssCode hgp625() {
    BitMatrix a = hgp625_seed();
    return hgp(a, a, "hgp625");
}

std::optional<CssCode> builtin_code(const std::string& name) {
    if (name == "steane") return steane();
    if (name == "gross") return gross_code();
    if (name == "fb126") return fb126();
    if (name == "hgp625") return hgp625();
    if (name == "hgp13") {
        CssCode c = hgp(repetition_checks(3), repetition_checks(3), "hgp13");
        return c;
    }
    if (name.size() > 3 && name.substr(0, 3) == "rep") {
        int d = std::atoi(name.c_str() + 3);
        if (d >= 2) return rep_code(d);
    }
    return std::nullopt;
}

std::vector<std::string> builtin_code_names() {
    return {"steane", "rep3", "rep5", "hgp13", "gross", "fb126", "hgp625"};
}

std::string write_code_bundle(const CssCode& code) {
    std::ostringstream out;
    out << "css-code v1\n";
    if (!code.name.empty()) out << "name " << code.name << '\n';
    out << "hx\n" << write_matrix_dense(code.hx);
    out << "hz\n" << write_matrix_dense(code.hz);
    if (code.natural_left) {
        out << "partition\n";
        std::string mask(static_cast<std::size_t>(code.n), '0');
        for (int i = 0; i < *code.natural_left; ++i) mask[static_cast<std::size_t>(i)] = '1';
        out << mask << '\n';
    }
    if (code.k > 0) {
        out << "lx\n" << write_matrix_dense(code.lx);
        out << "lz\n" << write_matrix_dense(code.lz);
    }
    return out.str();
}

CssCode parse_code_bundle(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto next_line = [&](std::string& out_line) {
        while (std::getline(in, out_line)) {
            ++line_no;
            if (!out_line.empty() && out_line.back() == '\r') out_line.pop_back();
            if (out_line.find_first_not_of(" \t") == std::string::npos) continue;
            return true;
        }
        return false;
    };
    if (!next_line(line) || line.rfind("css-code", 0) != 0) throw ParseError("expected css-code header", 1, 1);

    std::string name;
    std::optional<BitMatrix> hx, hz, lx, lz;
    std::optional<std::string> mask;
    auto read_matrix = [&]() {
        std::string header;
        if (!next_line(header)) throw ParseError("missing matrix header", line_no + 1, 1);
        std::istringstream hs(header);
        int rows = 0, cols = 0;
        if (!(hs >> rows >> cols)) throw ParseError("expected matrix header \"rows cols\"", line_no, 1);
        std::ostringstream buf;
        buf << rows << ' ' << cols << '\n';
        for (int r = 0; r < rows; ++r) {
            std::string row;
            if (!next_line(row)) throw ParseError("missing matrix row", line_no + 1, 1);
            buf << row << '\n';
        }
        return parse_matrix_auto(buf.str());
    };
    while (next_line(line)) {
        if (line.rfind("name ", 0) == 0)
            name = line.substr(5);
        else if (line == "hx")
            hx = read_matrix();
        else if (line == "hz")
            hz = read_matrix();
        else if (line == "lx")
            lx = read_matrix();
        else if (line == "lz")
            lz = read_matrix();
        else if (line == "partition") {
            std::string m;
            if (!next_line(m)) throw ParseError("missing partition mask", line_no + 1, 1);
            mask = m;
        } else {
            throw ParseError("unknown section: " + line, line_no, 1);
        }
    }
    if (!hx || !hz) throw ParseError("code bundle must contain hx and hz", line_no, 1);
    CssCode code = new_css(std::move(*hx), std::move(*hz), name);
    if (mask) {
        if (static_cast<int>(mask->size()) != code.n) throw ParseError("partition mask length mismatch", line_no, 1);
        // bundle partitions are restricted to a left prefix
        int left = 0;
        while (left < code.n && (*mask)[static_cast<std::size_t>(left)] == '1') ++left;
        for (int i = left; i < code.n; ++i)
            if ((*mask)[static_cast<std::size_t>(i)] == '1')
                throw ParseError("partition mask must be a left prefix", line_no, i + 1);
        code.natural_left = left;
    }
    // lx/lz in the file are advisory; k and bases are always recomputed
    (void)lx;
    (void)lz;
    return code;
}

void save_code(const CssCode& code, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write code bundle: " + path);
    out << write_code_bundle(code);
}

CssCode load_code(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open code bundle: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_bundle(buf.str());
}

}  // namespace lrc
