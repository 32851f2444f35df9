#include "rigi/bounds.hpp"

#include "rigi/bigint.hpp"
#include "rigi/errors.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace rigi {

namespace {

double ln_alpha_at(int d, int p) {
    return ((p - d) * M_LN2 + (2 * d - 3) * log_binomial(p, d)) / (2 * p - 3);
}

} // namespace

double ln_w(int d, int p) {
    return -M_LN2 + 2.0 * log_binomial(p, d) +
           (2.0 * p - 3.0) * std::log(static_cast<double>(p - d + 1) / (p + 1));
}

AlphaBeta alpha_beta(int d) {
    if (d < 2)
        throw std::invalid_argument("dimension must be at least 2");

    const int p_lo = d, p_hi = 4 * d + 60;

    int best_p = p_lo;
    double best_ln = ln_alpha_at(d, p_lo);
    for (int p = p_lo + 1; p <= p_hi; ++p) {
        const double v = ln_alpha_at(d, p);
        if (v > best_ln) {
            best_ln = v;
            best_p = p;
        }
    }

    // Unimodality guard: ln W must cross zero exactly once in the window,
    // and alpha's argmax must sit on that crossing.
    int sign_changes = 0;
    int crossing = -1;
    bool was_negative = ln_w(d, p_lo) < 0;
    if (!was_negative)
        throw std::logic_error("ln W(p) not negative at the window start");
    for (int p = p_lo + 1; p <= p_hi; ++p) {
        const bool neg = ln_w(d, p) < 0;
        if (was_negative && !neg) {
            ++sign_changes;
            crossing = p;
        } else if (!was_negative && neg) {
            ++sign_changes;
        }
        was_negative = neg;
    }
    if (sign_changes != 1)
        throw std::logic_error("ln W(p) must change sign exactly once in the window");
    if (crossing != best_p)
        throw std::logic_error("alpha maximizer disagrees with the W(p) crossing");

    AlphaBeta ab;
    ab.d = d;
    ab.p_star = best_p;
    ab.ln_alpha = best_ln;
    ab.ln_beta = (M_LN2 - 2.0 * log_binomial(best_p, d)) / (2 * best_p - 3);
    ab.alpha = std::exp(ab.ln_alpha);
    ab.beta = std::exp(ab.ln_beta);
    ab.base = 2.0 * ab.alpha;
    if (ab.ln_alpha + ab.ln_beta <= 0)
        throw std::logic_error("alpha*beta must exceed 1");
    return ab;
}

double c_factor(int p, int h, int d, const AlphaBeta &ab) {
    if (!(p >= d && d >= h && h >= 0))
        throw std::invalid_argument("need p >= d >= h >= 0");
    if (ab.d != d)
        throw std::invalid_argument("alpha/beta computed for a different dimension");
    return std::exp(log_binomial(p - h, d - h) - ab.ln_alpha + (p - h - d) * ab.ln_beta);
}

double bezout_bound(int n, int d) {
    if (n < d)
        throw std::invalid_argument("need n >= d");
    return std::exp2(static_cast<double>(d) * (n - d));
}

mpq_class borcea_streinu_bound(int n, int d) {
    if (n < d + 1)
        throw std::invalid_argument("need n >= d+1");
    mpq_class r = 2;
    for (int m = 0; m <= n - d - 2; ++m) {
        r *= binomial(n - 1 + m, n - d - 1 - m);
        r /= binomial(2 * m + 1, m);
    }
    r.canonicalize();
    return r;
}

BregmanMinc bregman_minc(int n, int k, int d) {
    if (n < 1 || k < 0 || d < 2)
        throw std::invalid_argument("bad Bregman-Minc arguments");
    const double ln_df = log_mpz(factorial(d));
    const double ln_2df = log_mpz(factorial(2 * d));
    const double ln_value = (static_cast<double>(k) / d) * ln_df +
                            (static_cast<double>(d) * n - k) / (2.0 * d) * ln_2df -
                            static_cast<double>(n) * ln_df;
    return {std::exp(ln_value), d != 2};
}

std::optional<mpq_class> bregman_minc_exact(int n, int k, int d) {
    if (k % d != 0 || (d * n - k) % (2 * d) != 0)
        return std::nullopt;
    mpq_class r = pow_mpz(factorial(d), k / d);
    r *= pow_mpz(factorial(2 * d), (d * n - k) / (2 * d));
    r /= pow_mpz(factorial(d), n);
    r.canonicalize();
    return r;
}

double bm_basis(int d) {
    if (d < 2)
        throw std::invalid_argument("dimension must be at least 2");
    return 2.0 * std::exp(0.5 * log_binomial(2 * d, d));
}

namespace {

// Exact evaluation of beta^q * (2 alpha)^e when the inner radical
// (everything raised to 1/(2p*-3)) is a perfect power.
std::optional<mpq_class> exact_radical(int d, int p, int q, int e) {
    if (e < 0 || q < 0)
        return std::nullopt;
    const unsigned root = static_cast<unsigned>(2 * p - 3);
    // ((2 alpha)^e * beta^q)^(2p-3) = 2^(e(2p-3)) * (2^(p-d) C^(2d-3))^e * (2 C^-2)^q
    mpz_class num = pow2(static_cast<unsigned long>(e) * root);
    num *= pow_mpz(pow2(p - d) * pow_mpz(binomial(p, d), 2 * d - 3),
                   static_cast<unsigned long>(e));
    num *= pow2(static_cast<unsigned long>(q));
    mpz_class den = pow_mpz(binomial(p, d), 2ul * q);

    mpq_class inner(num, den);
    inner.canonicalize();
    mpz_class rn, rd;
    if (!mpz_root(rn.get_mpz_t(), inner.get_num().get_mpz_t(), root))
        return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), inner.get_den().get_mpz_t(), root))
        return std::nullopt;
    mpq_class out(rn, rd);
    out.canonicalize();
    return out;
}

} // namespace

NewClosedBound new_closed_bound(int n, int d, bool has_clique, const AlphaBeta &ab) {
    if (n < d)
        throw std::invalid_argument("need n >= d");
    if (ab.d != d)
        throw std::invalid_argument("alpha/beta computed for a different dimension");

    const int exponent = has_clique ? n - d : n - 2;
    const double ln_base = M_LN2 + ab.ln_alpha;

    NewClosedBound out;
    out.printed = std::exp((3 * d - 4) * ab.ln_beta + exponent * ln_base);
    out.literal = d == 2 ? out.printed
                         : std::exp((3 * d - 2) * ab.ln_beta + exponent * ln_base);
    out.printed_exact = exact_radical(d, ab.p_star, 3 * d - 4, exponent);
    return out;
}

double corollary_bound(const std::vector<std::pair<int, int>> &components, int d,
                       const AlphaBeta &ab, bool check_integrity) {
    if (ab.d != d)
        throw std::invalid_argument("alpha/beta computed for a different dimension");
    long n = 0, hanging = 0, multi = 0;
    for (const auto &[ni, ki] : components) {
        if (ni < 1 || ki < 0)
            throw std::invalid_argument("bad component data");
        if (ni <= 1)
            continue; // single-vertex components have a forced orientation
        if (check_integrity) {
            if (d == 2 && ki < 3)
                throw IntegrityError("component with >= 2 vertices and < 3 hanging edges");
            if (d >= 3 && ni >= d && ki < d * (d + 1) / 2)
                throw IntegrityError("component with >= d vertices and < C(d+1,2) hanging edges");
        }
        n += ni;
        hanging += ki;
        ++multi;
    }
    if (multi == 0)
        return 1.0;
    return std::exp(n * ab.ln_alpha + (hanging - multi) * ab.ln_beta);
}

std::vector<Table1Row> table1(int d_min, int d_max) {
    if (d_min < 2 || d_max < d_min)
        throw std::invalid_argument("bad dimension range");
    std::vector<Table1Row> rows;
    for (int d = d_min; d <= d_max; ++d) {
        const AlphaBeta ab = alpha_beta(d);
        rows.push_back({d, ab.base, bm_basis(d), std::exp2(d)});
    }
    return rows;
}

std::string format_sig5(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.5g", x);
    std::string s = buf;
    // Integers keep no fractional part: "441.00" -> "441".
    const auto dot = s.find('.');
    if (dot != std::string::npos &&
        s.find_first_not_of('0', dot + 1) == std::string::npos)
        s.erase(dot);
    return s;
}

} // namespace rigi
