#include "rigi/permanent.hpp"

#include "rigi/bigint.hpp"
#include "rigi/errors.hpp"
#include "rigi/orientation.hpp"
#include "rigi/pseudograph.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace rigi {

namespace {

mpz_class mpz_from_i128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : v;
    mpz_class r = static_cast<unsigned long>(mag >> 64);
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
    r += static_cast<unsigned long>(mag & 0xffffffffffffffffULL);
    return neg ? mpz_class(-r) : r;
}

struct RyserPlan {
    int n;
    std::vector<std::vector<int>> col_entries; // per column: rows with nonzero entry
    std::vector<std::vector<int>> values;      // matrix copy for entry lookup
};

// Row-sum products fit a signed 128-bit accumulator when
// 2^n * prod_i(row_sum_i) stays clear of the sign bit.
bool fits_int128(const std::vector<std::vector<int>> &a) {
    const int n = static_cast<int>(a.size());
    mpz_class bound = pow2(n);
    for (const auto &row : a) {
        long s = 0;
        for (int x : row)
            s += x;
        if (s == 0)
            return true; // permanent is 0, any path works
        bound *= s;
    }
    return mpz_sizeinbase(bound.get_mpz_t(), 2) <= 125;
}

template <typename Accum, typename Term>
Accum ryser_loop(const RyserPlan &plan, const Deadline &deadline) {
    const int n = plan.n;
    std::vector<long> rowsum(n, 0);
    int zero_rows = n;
    Accum total = 0;

    const std::uint64_t end = (n >= 64) ? 0 : (1ULL << n);
    for (std::uint64_t k = 1; k < end; ++k) {
        if ((k & 0xffff) == 0 && deadline.expired())
            throw TimeoutError("permanent");
        const int j = __builtin_ctzll(k);
        const std::uint64_t gray = k ^ (k >> 1);
        const bool added = (gray >> j) & 1;
        for (int i : plan.col_entries[j]) {
            const long delta = plan.values[i][j];
            const long before = rowsum[i];
            rowsum[i] = added ? before + delta : before - delta;
            if (before == 0)
                --zero_rows;
            if (rowsum[i] == 0)
                ++zero_rows;
        }
        if (zero_rows > 0)
            continue;
        Term prod = 1;
        for (int i = 0; i < n; ++i)
            prod *= rowsum[i];
        if (__builtin_popcountll(gray) & 1)
            total -= prod;
        else
            total += prod;
    }
    return total;
}

} // namespace

mpz_class ryser_permanent(const std::vector<std::vector<int>> &a, Deadline deadline) {
    const int n = static_cast<int>(a.size());
    if (n == 0)
        return 1;
    if (n > 62)
        throw std::invalid_argument("matrix side exceeds 62");
    for (const auto &row : a) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix is not square");
        for (int x : row)
            if (x < 0)
                throw std::invalid_argument("matrix entries must be nonnegative");
    }

    RyserPlan plan;
    plan.n = n;
    plan.values = a;
    plan.col_entries.resize(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (a[i][j] != 0)
                plan.col_entries[j].push_back(i);

    mpz_class signed_sum;
    if (fits_int128(a)) {
        signed_sum = mpz_from_i128(ryser_loop<__int128, __int128>(plan, deadline));
    } else {
        signed_sum = ryser_loop<mpz_class, mpz_class>(plan, deadline);
    }
    return (n % 2) ? mpz_class(-signed_sum) : signed_sum;
}

std::vector<std::vector<int>> replicated_incidence_matrix(const Graph &g,
                                                          const std::vector<int> &clique,
                                                          int d) {
    if (!is_clique(g, clique))
        throw std::invalid_argument("fixture is not a clique of the graph");

    std::vector<int> fixed(clique.begin(), clique.end());
    std::sort(fixed.begin(), fixed.end());
    auto is_fixed = [&](int v) {
        return std::binary_search(fixed.begin(), fixed.end(), v);
    };

    std::vector<int> free_vertices;
    for (int v : g.vertices())
        if (!is_fixed(v))
            free_vertices.push_back(v);

    std::vector<Edge> free_edges;
    for (const auto &e : g.edges())
        if (!(is_fixed(e.first) && is_fixed(e.second)))
            free_edges.push_back(e);

    const size_t rows = free_vertices.size() * static_cast<size_t>(d);
    if (rows != free_edges.size())
        throw std::invalid_argument(
            "replicated incidence matrix is not square: " + std::to_string(rows) +
            " rows vs " + std::to_string(free_edges.size()) + " columns");

    std::vector<std::vector<int>> m(rows, std::vector<int>(free_edges.size(), 0));
    for (size_t vi = 0; vi < free_vertices.size(); ++vi) {
        const int v = free_vertices[vi];
        for (size_t j = 0; j < free_edges.size(); ++j) {
            if (free_edges[j].first == v || free_edges[j].second == v) {
                for (int copy = 0; copy < d; ++copy)
                    m[vi * d + copy][j] = 1;
            }
        }
    }
    return m;
}

mpz_class incidence_permanent(const Graph &g, const std::vector<int> &clique, int d,
                              Deadline deadline) {
    return ryser_permanent(replicated_incidence_matrix(g, clique, d), deadline);
}

mpq_class b_from_permanent(const mpz_class &per, int n_vertices, int d) {
    if (per < 0)
        throw std::invalid_argument("permanent must be nonnegative");
    if (n_vertices < d)
        throw std::invalid_argument("need at least d vertices");
    mpq_class q(per, pow_mpz(factorial(d), static_cast<unsigned long>(n_vertices - d)));
    q.canonicalize();
    return q;
}

mpz_class embedding_bound_orientations(const Graph &g, const std::vector<int> &clique,
                                       int d, int threads, Deadline deadline) {
    const Pseudograph L = build_pseudograph(g, clique);
    const OrientationCount b = count_valid_orientations(L, d, threads, deadline);
    return pow2(static_cast<unsigned long>(g.n_vertices() - d)) * b.count;
}

} // namespace rigi
