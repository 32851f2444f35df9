#include "rigi/orientation.hpp"

#include "rigi/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <future>
#include <stdexcept>
#include <vector>

namespace rigi {

namespace {

// One connected component, reduced to dense indices.
struct Component {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::pair<int, int>>> inc; // v -> (edge id, other endpoint)
    std::vector<int> base_need; // out-assignments each vertex still requires
};

struct SearchState {
    std::vector<std::int8_t> dir; // -1 undecided, 0 out of first, 1 out of second
    std::vector<int> need;
    std::vector<int> undecided;
    int remaining = 0;
};

SearchState initial_state(const Component &c) {
    SearchState s;
    s.dir.assign(c.edges.size(), -1);
    s.need = c.base_need;
    s.undecided.assign(c.n, 0);
    for (const auto &[u, v] : c.edges) {
        ++s.undecided[u];
        ++s.undecided[v];
    }
    s.remaining = static_cast<int>(c.edges.size());
    return s;
}

bool vertex_forced(const SearchState &s, int v) {
    return s.undecided[v] > 0 && (s.need[v] == 0 || s.need[v] == s.undecided[v]);
}

// Directs edge e out of `tail`. Returns false on an immediate contradiction
// at either endpoint; newly forced endpoints are queued.
bool assign_edge(const Component &c, SearchState &s, int e, int tail,
                 std::vector<int> &queue) {
    const auto &[u, v] = c.edges[e];
    s.dir[e] = (tail == u) ? 0 : 1;
    --s.need[tail];
    --s.undecided[u];
    --s.undecided[v];
    --s.remaining;
    for (int x : {u, v}) {
        if (s.need[x] < 0 || s.need[x] > s.undecided[x])
            return false;
        if (vertex_forced(s, x))
            queue.push_back(x);
    }
    return true;
}

// Fixpoint of forced assignments. False means the state admits no
// completion; true leaves every unfinished vertex with slack on both sides.
bool propagate(const Component &c, SearchState &s) {
    std::vector<int> queue;
    for (int v = 0; v < c.n; ++v) {
        if (s.need[v] < 0 || s.need[v] > s.undecided[v])
            return false;
        if (vertex_forced(s, v))
            queue.push_back(v);
    }
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        if (!vertex_forced(s, v))
            continue; // already settled by an earlier assignment
        const bool all_out = s.need[v] == s.undecided[v];
        for (const auto &[e, w] : c.inc[v]) {
            if (s.dir[e] != -1)
                continue;
            if (!assign_edge(c, s, e, all_out ? v : w, queue))
                return false;
        }
    }
    return true;
}

// Most constrained undecided edge: minimize the smaller endpoint slack.
int pick_branch(const Component &c, const SearchState &s) {
    int best = -1, best_key = INT32_MAX;
    for (int e = 0; e < static_cast<int>(c.edges.size()); ++e) {
        if (s.dir[e] != -1)
            continue;
        const auto &[u, v] = c.edges[e];
        const auto slack = [&s](int x) {
            return std::min(s.need[x], s.undecided[x] - s.need[x]);
        };
        const int key = std::min(slack(u), slack(v));
        if (key < best_key) {
            best_key = key;
            best = e;
        }
    }
    return best;
}

mpz_class count_rec(const Component &c, SearchState s, const Deadline &deadline,
                    std::uint64_t &nodes) {
    if (!propagate(c, s))
        return 0;
    if (s.remaining == 0)
        return 1;
    if ((++nodes & 1023) == 0 && deadline.expired())
        throw TimeoutError("backtracking");

    const int e = pick_branch(c, s);
    const auto &[u, v] = c.edges[e];
    std::vector<int> ignored;

    SearchState left = s;
    assign_edge(c, left, e, u, ignored);
    mpz_class total = count_rec(c, std::move(left), deadline, nodes);

    ignored.clear();
    assign_edge(c, s, e, v, ignored);
    total += count_rec(c, std::move(s), deadline, nodes);
    return total;
}

mpz_class count_component(const Component &c, int threads, const Deadline &deadline) {
    for (int v = 0; v < c.n; ++v)
        if (c.base_need[v] < 0 ||
            c.base_need[v] > static_cast<int>(c.inc[v].size()))
            return 0;

    SearchState root = initial_state(c);
    std::uint64_t nodes = 0;
    if (threads <= 1)
        return count_rec(c, std::move(root), deadline, nodes);

    // Split the top of the branch tree into independent subproblems; the
    // subproblem set is deterministic and addition commutes, so the result
    // is identical for any worker count.
    std::deque<SearchState> open;
    open.push_back(std::move(root));
    mpz_class solved = 0;
    const size_t target = static_cast<size_t>(threads) * 4;
    while (!open.empty() && open.size() < target) {
        SearchState s = std::move(open.front());
        open.pop_front();
        if (!propagate(c, s))
            continue;
        if (s.remaining == 0) {
            solved += 1;
            continue;
        }
        const int e = pick_branch(c, s);
        const auto &[u, v] = c.edges[e];
        std::vector<int> ignored;
        SearchState left = s;
        assign_edge(c, left, e, u, ignored);
        open.push_back(std::move(left));
        ignored.clear();
        assign_edge(c, s, e, v, ignored);
        open.push_back(std::move(s));
    }

    std::vector<SearchState> states(std::make_move_iterator(open.begin()),
                                    std::make_move_iterator(open.end()));
    const size_t per = (states.size() + threads - 1) / threads;
    std::vector<std::future<mpz_class>> futures;
    for (size_t lo = 0; lo < states.size(); lo += per) {
        const size_t hi = std::min(states.size(), lo + per);
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
            mpz_class part = 0;
            std::uint64_t local_nodes = 0;
            for (size_t i = lo; i < hi; ++i)
                part += count_rec(c, states[i], deadline, local_nodes);
            return part;
        }));
    }
    mpz_class total = solved;
    for (auto &f : futures)
        total += f.get();
    return total;
}

// Splits L into components and translates the per-vertex requirement into
// residual normal-edge needs.
mpz_class count_all(const Pseudograph &L, const std::map<int, int> &required, int threads,
                    const Deadline &deadline) {
    mpz_class total = 1;
    for (const Pseudograph &part : connected_components(L)) {
        Component c;
        const auto &vs = part.vertices();
        c.n = part.n_vertices();
        auto index_of = [&](int v) {
            return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        };
        for (const auto &[a, b] : part.normal_edges())
            c.edges.emplace_back(index_of(a), index_of(b));
        c.inc.resize(c.n);
        for (int e = 0; e < static_cast<int>(c.edges.size()); ++e) {
            c.inc[c.edges[e].first].emplace_back(e, c.edges[e].second);
            c.inc[c.edges[e].second].emplace_back(e, c.edges[e].first);
        }
        c.base_need.resize(c.n);
        for (int i = 0; i < c.n; ++i)
            c.base_need[i] = required.at(vs[i]) - part.hanging_count(vs[i]);

        mpz_class part_count = count_component(c, threads, deadline);
        if (part_count == 0)
            return 0;
        total *= part_count;
    }
    return total;
}

} // namespace

OrientationCount count_valid_orientations(const Pseudograph &L, int d, int threads,
                                          Deadline deadline) {
    if (d < 2)
        throw std::invalid_argument("dimension must be at least 2");

    OrientationCount result;
    result.method = OrientationCount::Method::backtracking;

    if (L.n_normal_edges() + L.hanging_total() != d * L.n_vertices()) {
        result.count = 0;
        return result;
    }
    std::map<int, int> required;
    for (int v : L.vertices()) {
        const auto [p, h] = L.extended_degree(v);
        if (p < d || h > d) {
            result.count = 0;
            return result;
        }
        required[v] = d;
    }
    result.count = count_all(L, required, threads, deadline);
    return result;
}

namespace detail {

mpz_class propagation_score(const Pseudograph &L, int d) {
    mpz_class score = 1;
    for (const Pseudograph &part : connected_components(L)) {
        Component c;
        const auto &vs = part.vertices();
        c.n = part.n_vertices();
        auto index_of = [&](int v) {
            return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        };
        for (const auto &[a, b] : part.normal_edges())
            c.edges.emplace_back(index_of(a), index_of(b));
        c.inc.resize(c.n);
        for (int e = 0; e < static_cast<int>(c.edges.size()); ++e) {
            c.inc[c.edges[e].first].emplace_back(e, c.edges[e].second);
            c.inc[c.edges[e].second].emplace_back(e, c.edges[e].first);
        }
        c.base_need.resize(c.n);
        for (int i = 0; i < c.n; ++i)
            c.base_need[i] = d - part.hanging_count(vs[i]);
        for (int i = 0; i < c.n; ++i)
            if (c.base_need[i] < 0 ||
                c.base_need[i] > static_cast<int>(c.inc[i].size()))
                return 0;

        SearchState s = initial_state(c);
        if (!propagate(c, s))
            return 0;
        mpz_class part_score = 1;
        for (int v = 0; v < c.n; ++v) {
            mpz_class ways;
            mpz_bin_uiui(ways.get_mpz_t(), s.undecided[v], s.need[v]);
            part_score *= ways;
        }
        score *= part_score;
    }
    return score;
}

} // namespace detail

OrientationCount count_with_profile(const Pseudograph &L, const OutdegreeProfile &profile,
                                    int threads, Deadline deadline) {
    for (int v : L.vertices())
        if (!profile.required.count(v))
            throw std::invalid_argument("profile missing vertex " + std::to_string(v));

    OrientationCount result;
    result.method = OrientationCount::Method::backtracking;

    long required_sum = 0;
    for (int v : L.vertices())
        required_sum += profile.required.at(v);
    if (required_sum != L.n_normal_edges() + L.hanging_total()) {
        result.count = 0;
        return result;
    }
    result.count = count_all(L, profile.required, threads, deadline);
    return result;
}

} // namespace rigi
