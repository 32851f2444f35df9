#ifndef RIGI_BOUNDS_HPP
#define RIGI_BOUNDS_HPP

#include <gmpxx.h>
#include <optional>
#include <utility>
#include <vector>

namespace rigi {

// Optimized exponential-bound constants for one dimension:
//   alpha_d = max_{p >= d} (2^(p-d) * C(p,d)^(2d-3))^(1/(2p-3))
//   beta_d  = (2 * C(p*,d)^(-2))^(1/(2p*-3))     at the maximizing p*.
// Log forms are kept so downstream powers lose no precision.
struct AlphaBeta {
    int d = 0;
    int p_star = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double ln_alpha = 0.0;
    double ln_beta = 0.0;
    double base = 0.0; // 2 * alpha, the embedding power basis
};

// Exhaustive scan of p in [d, 4d+60], a window that provably contains the
// maximizer (p* = 2d + ln(d)/2 + O(1)). Verifies along the way that
// ln W(p) changes sign exactly once, so a truncated window cannot return a
// silent wrong maximum.
AlphaBeta alpha_beta(int d);

// ln W(p) = -ln 2 + 2 ln C(p,d) + (2p-3) ln((p-d+1)/(p+1)); alpha_d(p)
// increases while this is negative and decreases after it turns positive.
double ln_w(int d, int p);

// C(p-h, d-h) * alpha^(-1) * beta^(p-h-d); at most 1 for every degree a
// single-vertex elimination may remove, which is what makes the product
// bound close.
double c_factor(int p, int h, int d, const AlphaBeta &ab);

// (2^d)^(n-d)
double bezout_bound(int n, int d);

// 2 * prod_{m=0}^{n-d-2} C(n-1+m, n-d-1-m) / C(2m+1, m), exact.
mpq_class borcea_streinu_bound(int n, int d);

struct BregmanMinc {
    double value = 0.0;
    bool extended = false; // d > 2 uses the analogous factorial form
};

// (d!)^(k/d) * ((2d)!)^((dn-k)/(2d)) * (d!)^(-n) for a pseudograph with n
// vertices and k hanging edges; the d = 2 case is the classic row-sum form.
BregmanMinc bregman_minc(int n, int k, int d);
std::optional<mpq_class> bregman_minc_exact(int n, int k, int d);

// 2 * sqrt(C(2d,d))
double bm_basis(int d);

struct NewClosedBound {
    double printed = 0.0;  // exponent 3d-4 on beta; matches the published constants
    double literal = 0.0;  // exponent 3d-2 as stated for d >= 3; equals printed at d = 2
    std::optional<mpq_class> printed_exact; // set when the radical simplifies exactly
};

// beta_d^q * (2 alpha_d)^(n-d) closed-form embedding bound. When the graph
// has no d-clique the exponent of (2 alpha_d) rises to n-2.
NewClosedBound new_closed_bound(int n, int d, bool has_clique, const AlphaBeta &ab);

// alpha^n * beta^(k'-c') over the components with more than one vertex,
// n and k' summed over them, c' their number. Components are (n_i, k_i)
// pairs. With `check_integrity`, each multi-vertex component must carry at
// least 3 hanging edges (d=2), or C(d+1,2) for components with >= d
// vertices (d>=3); a violation on certified input signals an upstream bug.
double corollary_bound(const std::vector<std::pair<int, int>> &components, int d,
                       const AlphaBeta &ab, bool check_integrity = true);

struct Table1Row {
    int d = 0;
    double this_basis = 0.0; // 2 * alpha_d
    double bm = 0.0;         // 2 * sqrt(C(2d,d))
    double bezout = 0.0;     // 2^d
};

std::vector<Table1Row> table1(int d_min, int d_max);

// Five significant figures, integer-valued entries printed without a
// fractional part.
std::string format_sig5(double x);

} // namespace rigi

#endif // RIGI_BOUNDS_HPP
