#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/bitmat.hpp"

namespace lrc {

// Group algebra F2[Z_l x Z_m]; m == 1 gives the cyclic (quasi-cyclic) case
// and l == m == 1 the trivial ring (plain binary matrices).
struct RingDesc {
    int l = 1;
    int m = 1;
    int order() const { return l * m; }
    bool operator==(const RingDesc& o) const { return l == o.l && m == o.m; }
};

// Ring element as a sorted set of group-element ids; id(i, j) = i*m + j.
// An empty term list is the zero element.
struct RingElem {
    std::vector<int> terms;
    bool is_zero() const { return terms.empty(); }
};

RingElem ring_monomial(const RingDesc& ring, int xpow, int ypow = 0);
RingElem ring_add(const RingDesc& ring, const RingElem& a, const RingElem& b);
RingElem ring_mul(const RingDesc& ring, const RingElem& a, const RingElem& b);
RingElem ring_antipode(const RingDesc& ring, const RingElem& a);  // inverts group elements
// Parses e.g. "x^3 + y + y^2", "1 + x", "x3+y2".
RingElem parse_ring_poly(const RingDesc& ring, const std::string& text);
// Regular representation: order x order binary matrix with row g set at
// columns g+h for each term h. Row and column weights both equal |terms|.
BitMatrix ring_lift(const RingDesc& ring, const RingElem& a);

struct Protograph {
    RingDesc ring;
    int rows = 0;
    int cols = 0;
    std::vector<RingElem> cells;  // row-major

    Protograph() = default;
    Protograph(RingDesc r, int rows_, int cols_)
        : ring(r), rows(rows_), cols(cols_), cells(static_cast<std::size_t>(rows_) * cols_) {}
    const RingElem& at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }
    RingElem& at(int r, int c) { return cells[static_cast<std::size_t>(r) * cols + c]; }
    static Protograph from_binary(const BitMatrix& b);  // trivial ring
};

Protograph proto_kron(const Protograph& a, const Protograph& b);
Protograph proto_identity(const RingDesc& ring, int n);
Protograph proto_transpose(const Protograph& p);  // transpose + antipode per cell
BitMatrix proto_lift(const Protograph& p);
// Weight enumeration matrix W(M)_ij = number of terms of cell (i,j), plus its
// max row/col sums r(M), c(M).
struct ProtoWeights {
    std::vector<std::vector<int>> w;
    int max_row_sum = 0;
    int max_col_sum = 0;
};
ProtoWeights proto_weights(const Protograph& p);

struct DegreeStats {
    int r_hx = 0, c_hx = 0;
    int r_hz = 0, c_hz = 0;
    int r_hxz = 0, c_hxz = 0;
    int delta_hxz = 0;
};

struct CssCode {
    BitMatrix hx;  // m x n
    BitMatrix hz;  // m' x n
    int n = 0;
    int k = 0;
    BitMatrix lx;  // k x n, rows in ker(hz) \ rowspace(hx)
    BitMatrix lz;  // k x n, rows in ker(hx) \ rowspace(hz); lx*lz^T = I_k
    std::optional<int> natural_left;  // natural partition: columns [0, natural_left)
    std::string name;
};

// Validates commutation, recomputes k and builds paired logical bases.
CssCode new_css(BitMatrix hx, BitMatrix hz, std::string name = "");

DegreeStats degree_stats(const CssCode& code);

// Standard hypergraph product of binary matrices a (mA x nA) and b (mB x nB):
// n = nA*nB + mA*mB, natural left block of width nA*nB.
CssCode hgp(const BitMatrix& a, const BitMatrix& b, std::string name = "");

// Lifted product of two protographs over a common ring:
//   HX = [C (x) I_{mD} | I_{mC} (x) D],  HZ = [I_{nC} (x) D^T | C^T (x) I_{nD}],
// lifted through the regular representation. Natural left block width
// nC*mD*|G|.
CssCode lifted_product(const Protograph& c, const Protograph& d, std::string name = "");

// Bivariate bicycle code: 1x1 protographs over F2[Z_l x Z_m].
CssCode bivariate_bicycle(int l, int m, const std::string& a_poly, const std::string& b_poly,
                          std::string name = "");

// Circular twist matrix: entry >= 0 is a cyclic shift power, -1 an absent
// block. The base matrix is the support of the grid.
struct TwistSpec {
    std::vector<std::vector<int>> t;
    int fibre_len = 0;
    // Orientation of the shift generator rho(x): false = S with S[i][i+1]=1,
    // true = S^T. Both give isomorphic codes; kept switchable.
    bool transpose_shift = false;
    int rows() const { return static_cast<int>(t.size()); }
    int cols() const { return t.empty() ? 0 : static_cast<int>(t[0].size()); }
};

// Fibre bundle code: HX = [B (x)_phi I | I (x) F], HZ = [I (x) F^T | (B (x)_phi I)^T]
// with block (i,j) of the twisted part equal to S^{T_ij} when T_ij >= 0.
CssCode fiber_bundle(const TwistSpec& t, const BitMatrix& f, std::string name = "");

// Quasi-cyclic lifted-product protographs reproducing fiber_bundle(t, rho(f))
// bit-exactly: C_ij = b_ij x^{T_ij}, D = [f_poly].
std::pair<Protograph, Protograph> fb_to_lifted_product(const TwistSpec& t, const RingElem& f_poly);

// --- builtin codes ---
BitMatrix repetition_checks(int d);          // (d-1) x d chain
BitMatrix repetition_ring_checks(int d);     // d x d circulant I + S
BitMatrix hamming_7_4_checks();
CssCode steane();
CssCode rep_code(int d);                     // repetition as CSS: hz = chain checks, hx empty
CssCode gross_code();                        // [[144,12,12]], A = x^3+y+y^2, B = y^3+x+x^2 over Z12 x Z6
TwistSpec fb126_twists();
CssCode fb126();                             // [[126,8,9]]
CssCode hgp625();                            // [[625,25,8]] from a fixed (3,4)-regular [20,5,8] seed
BitMatrix hgp625_seed();
// Builtin by name ("steane", "rep3", "rep5", "hgp13", "gross", "fb126", "hgp625").
std::optional<CssCode> builtin_code(const std::string& name);
std::vector<std::string> builtin_code_names();

// --- code bundle io ---
// Single text file with sections: "css-code v1", then "hx"/"hz" blocks
// (matrix text), optional "partition" (0/1 mask line), optional "lx"/"lz".
std::string write_code_bundle(const CssCode& code);
CssCode parse_code_bundle(const std::string& text);
void save_code(const CssCode& code, const std::string& path);
CssCode load_code(const std::string& path);

}  // namespace lrc
