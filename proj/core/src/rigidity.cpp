#include "rigi/rigidity.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rigi {

namespace detail {

namespace {

// Directed search for a free pebble reachable from `src`. On success the
// path to the pebble is reversed and the pebble moved to `src`.
// `keep` marks vertices whose pebbles may not be taken.
class PebbleState {
public:
    explicit PebbleState(int n) : pebbles(n, 2), out(n), visited(n, 0), stamp(0) {}

    std::vector<int> pebbles;
    std::vector<std::vector<int>> out; // directed adjacency of inserted edges
    std::vector<int> visited;
    int stamp;

    bool find_pebble(int src, int keep_a, int keep_b, std::vector<int> &parent) {
        // Iterative DFS; parent[] records the tree for path reversal.
        std::vector<int> stack{src};
        visited[src] = stamp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : out[v]) {
                if (visited[w] == stamp)
                    continue;
                visited[w] = stamp;
                parent[w] = v;
                if (pebbles[w] > 0 && w != keep_a && w != keep_b) {
                    // Reverse edges along src -> ... -> w and move the pebble.
                    int cur = w;
                    while (cur != src) {
                        int p = parent[cur];
                        auto it = std::find(out[p].begin(), out[p].end(), cur);
                        out[p].erase(it);
                        out[cur].push_back(p);
                        cur = p;
                    }
                    --pebbles[w];
                    ++pebbles[src];
                    return true;
                }
                stack.push_back(w);
            }
        }
        return false;
    }
};

} // namespace

bool pebble_game_2_3(const Graph &g, std::vector<int> &violating) {
    const int n = g.n_vertices();
    PebbleState st(n);
    std::vector<int> parent(n, -1);

    for (const auto &[lu, lv] : g.edges()) {
        const int u = g.index_of(lu);
        const int v = g.index_of(lv);
        // An independent edge needs 4 pebbles on its endpoints.
        while (st.pebbles[u] + st.pebbles[v] < 4) {
            ++st.stamp;
            st.visited[u] = st.visited[v] = st.stamp;
            bool moved = st.find_pebble(u, u, v, parent);
            if (!moved)
                moved = st.find_pebble(v, u, v, parent);
            if (!moved) {
                // Everything reachable from {u,v} is pebble-free apart from
                // the <=3 pebbles on u,v themselves: that region plus the
                // rejected edge violates |E'| <= 2|V'| - 3.
                violating.clear();
                for (int i = 0; i < n; ++i)
                    if (st.visited[i] == st.stamp)
                        violating.push_back(g.label_of(i));
                return false;
            }
        }
        --st.pebbles[u];
        st.out[u].push_back(v);
    }
    return true;
}

} // namespace detail

namespace {

long maxwell_rhs(long nv, int d) {
    return static_cast<long>(d) * nv - static_cast<long>(d + 1) * d / 2;
}

// Exhaustive subgraph sweep for d >= 3; practical up to ~20 vertices.
// Returns an offending vertex subset or nullopt.
std::optional<std::vector<int>> exhaustive_violation(const Graph &g, int d) {
    const int n = g.n_vertices();
    std::vector<std::pair<int, int>> eidx;
    eidx.reserve(g.n_edges());
    for (const auto &[u, v] : g.edges())
        eidx.emplace_back(g.index_of(u), g.index_of(v));

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size < d)
            continue;
        long inside = 0;
        for (const auto &[u, v] : eidx)
            if ((mask >> u & 1) && (mask >> v & 1))
                ++inside;
        if (inside > maxwell_rhs(size, d)) {
            std::vector<int> bad;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1)
                    bad.push_back(g.label_of(i));
            return bad;
        }
    }
    return std::nullopt;
}

} // namespace

MaxwellReport maxwell_check(const Graph &g, int d) {
    if (d < 2)
        throw std::invalid_argument("dimension must be at least 2");

    MaxwellReport rep;
    rep.d = d;
    rep.necessary_only = d >= 3;

    const long want = maxwell_rhs(g.n_vertices(), d);
    rep.count_ok = g.n_edges() == want;

    std::ostringstream msg;
    if (!rep.count_ok)
        msg << "maxwell count violated: |E|=" << g.n_edges() << " != " << want;

    if (d == 2) {
        std::vector<int> violating;
        rep.sparsity_ok = detail::pebble_game_2_3(g, violating);
        rep.subgraph_check_exhaustive = true;
        if (!rep.sparsity_ok) {
            rep.violating_subgraph = violating;
            if (rep.count_ok)
                msg << "overbraced subgraph on " << violating.size() << " vertices";
        }
    } else if (g.n_vertices() <= 20) {
        auto bad = exhaustive_violation(g, d);
        rep.sparsity_ok = !bad.has_value();
        rep.subgraph_check_exhaustive = true;
        if (bad) {
            rep.violating_subgraph = std::move(*bad);
            if (rep.count_ok)
                msg << "overbraced subgraph on " << rep.violating_subgraph->size()
                    << " vertices";
        }
    } else {
        // Too large to sweep all subsets; only the global count is certified.
        rep.sparsity_ok = true;
        rep.subgraph_check_exhaustive = false;
        msg << (rep.count_ok ? "subgraph sweep skipped (graph too large)" : "");
    }

    rep.global_ok = rep.count_ok && rep.sparsity_ok;
    rep.message = msg.str();
    return rep;
}

} // namespace rigi
