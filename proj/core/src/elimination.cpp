#include "rigi/elimination.hpp"

#include "rigi/bigint.hpp"
#include "rigi/block_cut_tree.hpp"
#include "rigi/bounds.hpp"
#include "rigi/errors.hpp"
#include "rigi/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace rigi {

StepCost step_cost_equilibrium(int p, int h, int d) {
    if (h < 0 || d < 2)
        throw std::invalid_argument("invalid extended degree or dimension");
    if (p < d || h > d)
        throw std::domain_error("degree (" + std::to_string(p) + "," + std::to_string(h) +
                                ") admits no valid orientation");
    if (p == d + 1 && h == d - 1)
        throw std::invalid_argument("degree (d+1,d-1) requires path elimination");
    return {binomial_i64(p - h, d - h), p - h - d};
}

namespace {

// Walks the cycle forming a leaf block and returns the run of non-cut
// vertices to eliminate. `start` is the first path vertex, `before` the
// vertex conceptually preceding it on the cycle.
std::vector<int> walk_cycle(const std::map<int, std::vector<int>> &adj, int before,
                            int start, size_t count) {
    std::vector<int> path;
    int prev = before, cur = start;
    while (path.size() < count) {
        path.push_back(cur);
        const auto &nbrs = adj.at(cur);
        if (nbrs.size() != 2)
            throw std::runtime_error("leaf block is not a cycle");
        const int next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
    }
    return path;
}

} // namespace

EliminationStep select_step(const Pseudograph &L, int d) {
    if (L.n_vertices() < 2)
        throw std::invalid_argument("no step applies to a base-case pseudograph");

    const BlockCutTree bct = block_cut_tree(L);

    // Vertex step: cheapest non-cut vertex whose degree is not (d+1,d-1).
    EliminationStep best;
    bool have_vertex = false;
    for (int v : L.vertices()) {
        if (bct.is_cut_vertex(v))
            continue;
        const auto [p, h] = L.extended_degree(v);
        if (p == d + 1 && h == d - 1)
            continue;
        const StepCost sc = step_cost_equilibrium(p, h, d);
        if (!have_vertex || sc.cost < best.cost) {
            best = {EliminationStep::Kind::vertex, {v}, p, h, sc.cost, sc.equilibrium};
            have_vertex = true;
        }
    }
    if (have_vertex)
        return best;

    // Path step: all non-cut vertices now have degree (d+1,d-1) and normal
    // degree 2, so every leaf block is a cycle.
    const auto leaves = bct.leaf_blocks();
    if (leaves.empty())
        throw std::runtime_error("no leaf block in block-cut tree");
    const auto &block = bct.blocks[leaves.front()];

    std::set<int> members(block.vertices.begin(), block.vertices.end());
    std::map<int, std::vector<int>> adj;
    for (int v : block.vertices)
        adj[v];
    for (const auto &[a, b] : L.normal_edges())
        if (members.count(a) && members.count(b)) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    for (auto &[v, nbrs] : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        if (nbrs.size() != 2)
            throw std::runtime_error("leaf block is not a cycle");
    }

    int cut = -1;
    for (int v : block.vertices)
        if (bct.is_cut_vertex(v)) {
            cut = v;
            break; // a leaf block has at most one
        }

    std::vector<int> path;
    if (cut >= 0) {
        // Everything except the cut vertex, entered from its smaller neighbor.
        path = walk_cycle(adj, cut, adj[cut][0], block.vertices.size() - 1);
    } else {
        // Whole component is a cycle: start at the smallest label, head
        // toward its smaller neighbor, leave one vertex to survive.
        const int s = block.vertices.front();
        path = walk_cycle(adj, adj[s][1], s, block.vertices.size() - 1);
    }
    if (path.size() < 2)
        throw std::runtime_error("no path of length >= 2 available");
    for (int v : path) {
        const auto [p, h] = L.extended_degree(v);
        if (p != d + 1 || h != d - 1)
            throw std::runtime_error("path vertex lacks degree (d+1,d-1)");
    }

    EliminationStep step;
    step.kind = EliminationStep::Kind::path;
    step.vertices = std::move(path);
    step.cost = 2;
    step.equilibrium = 1 - (d - 1) * static_cast<int>(step.vertices.size());
    return step;
}

namespace {

struct IncidentEdge {
    int neighbor;
    std::size_t pos;
};

// Successor after removing vertex v: every incident normal edge leaves F;
// the ones flagged kept become hanging at their other endpoint.
Pseudograph vertex_successor(const Pseudograph &L, int v,
                             const std::vector<IncidentEdge> &incident,
                             const std::vector<char> &deleted) {
    std::set<std::size_t> drop;
    std::map<int, int> hanging(L.hanging().begin(), L.hanging().end());
    hanging.erase(v);
    for (std::size_t i = 0; i < incident.size(); ++i) {
        drop.insert(incident[i].pos);
        if (!deleted[i])
            ++hanging[incident[i].neighbor];
    }
    std::vector<int> vertices;
    for (int u : L.vertices())
        if (u != v)
            vertices.push_back(u);
    std::vector<Edge> normal;
    const auto &edges = L.normal_edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!drop.count(i))
            normal.push_back(edges[i]);
    return Pseudograph(std::move(vertices), std::move(normal), std::move(hanging));
}

// The cost counts every deletion choice; the canonical successor is the
// candidate whose propagation score is largest, which tracks the successor
// holding the most of the surviving orientations. Ties go to the
// lexicographically first deletion set.
Pseudograph apply_vertex_step(const Pseudograph &L, const EliminationStep &s, int d) {
    const int v = s.vertices.front();
    const auto [p, h] = L.extended_degree(v);
    if (p != s.p || h != s.h)
        throw std::invalid_argument("step degree does not match pseudograph");
    step_cost_equilibrium(p, h, d); // validates legality

    std::vector<IncidentEdge> incident;
    const auto &edges = L.normal_edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].first == v)
            incident.push_back({edges[i].second, i});
        else if (edges[i].second == v)
            incident.push_back({edges[i].first, i});
    }
    const int deletions = d - h;
    const std::size_t m = incident.size();

    if (binomial(m, deletions) <= 512) {
        // Rank every deletion set.
        std::vector<int> combo(deletions);
        for (int i = 0; i < deletions; ++i)
            combo[i] = i;
        Pseudograph best;
        mpz_class best_score = -1;
        for (;;) {
            std::vector<char> deleted(m, 0);
            for (int i : combo)
                deleted[i] = 1;
            Pseudograph cand = vertex_successor(L, v, incident, deleted);
            mpz_class score = detail::propagation_score(cand, d);
            if (score > best_score) {
                best_score = score;
                best = std::move(cand);
            }
            // next combination, lexicographic
            int i = deletions - 1;
            while (i >= 0 && combo[i] == static_cast<int>(m) - deletions + i)
                --i;
            if (i < 0)
                break;
            ++combo[i];
            for (int j = i + 1; j < deletions; ++j)
                combo[j] = combo[j - 1] + 1;
        }
        return best;
    }

    // Degenerate wide vertex: fall back to per-edge freedom ratios, deleting
    // where the neighbor loses the least.
    std::vector<std::pair<IncidentEdge, std::pair<std::int64_t, std::int64_t>>> scored;
    for (const auto &ie : incident) {
        const auto [pw, hw] = L.extended_degree(ie.neighbor);
        const int nd = pw - hw;
        scored.push_back({ie, {binomial_i64(nd - 1, d - hw),      // delete freedom
                               binomial_i64(nd - 1, d - hw - 1)}}); // keep freedom
    }
    std::sort(scored.begin(), scored.end(), [](const auto &a, const auto &b) {
        const __int128 lhs = static_cast<__int128>(a.second.first) * b.second.second;
        const __int128 rhs = static_cast<__int128>(b.second.first) * a.second.second;
        if (lhs != rhs)
            return lhs > rhs;
        if (a.first.neighbor != b.first.neighbor)
            return a.first.neighbor < b.first.neighbor;
        return a.first.pos < b.first.pos;
    });
    std::vector<char> deleted(m, 0);
    for (int i = 0; i < deletions; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (incident[j].pos == scored[i].first.pos)
                deleted[j] = 1;
    return vertex_successor(L, v, incident, deleted);
}

Pseudograph apply_path_step(const Pseudograph &L, const EliminationStep &s, int d) {
    const auto &path = s.vertices;
    if (path.size() < 2)
        throw std::invalid_argument("path step needs at least 2 vertices");
    std::set<int> on_path(path.begin(), path.end());
    if (on_path.size() != path.size())
        throw std::invalid_argument("path repeats a vertex");
    for (int v : path) {
        const auto [p, h] = L.extended_degree(v);
        if (p != d + 1 || h != d - 1)
            throw std::invalid_argument("path vertex lacks degree (d+1,d-1)");
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        const Edge want{std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])};
        if (!std::binary_search(L.normal_edges().begin(), L.normal_edges().end(), want))
            throw std::invalid_argument("path vertices are not consecutive");
    }

    // Exactly two edges leave the path; one survives and becomes hanging at
    // its outside endpoint. Both candidates are ranked by propagation score;
    // ties go to the edge at the last path vertex.
    const auto &edges = L.normal_edges();
    std::set<size_t> drop;
    struct External {
        int inside, outside;
    };
    std::vector<External> externals;
    for (size_t i = 0; i < edges.size(); ++i) {
        const bool a_in = on_path.count(edges[i].first) > 0;
        const bool b_in = on_path.count(edges[i].second) > 0;
        if (!a_in && !b_in)
            continue;
        drop.insert(i);
        if (a_in && b_in)
            continue; // internal edge, removed
        const int inside = a_in ? edges[i].first : edges[i].second;
        const int outside = a_in ? edges[i].second : edges[i].first;
        externals.push_back({inside, outside});
    }
    if (externals.empty())
        throw std::invalid_argument("path has no surviving incident edge");

    std::vector<int> vertices;
    for (int u : L.vertices())
        if (!on_path.count(u))
            vertices.push_back(u);
    std::vector<Edge> normal;
    for (size_t i = 0; i < edges.size(); ++i)
        if (!drop.count(i))
            normal.push_back(edges[i]);

    auto successor_keeping = [&](int kept_endpoint) {
        std::map<int, int> hanging(L.hanging().begin(), L.hanging().end());
        for (int v : path)
            hanging.erase(v);
        ++hanging[kept_endpoint];
        return Pseudograph(vertices, normal, std::move(hanging));
    };

    // Prefer the attachment at the path's last vertex on ties, so iterate it
    // first and replace only on a strictly better score.
    std::stable_sort(externals.begin(), externals.end(),
                     [&](const External &a, const External &b) {
                         return (a.inside == path.back()) > (b.inside == path.back());
                     });
    Pseudograph best = successor_keeping(externals.front().outside);
    mpz_class best_score = detail::propagation_score(best, d);
    for (std::size_t i = 1; i < externals.size(); ++i) {
        Pseudograph cand = successor_keeping(externals[i].outside);
        mpz_class score = detail::propagation_score(cand, d);
        if (score > best_score) {
            best_score = score;
            best = std::move(cand);
        }
    }
    return best;
}

} // namespace

Pseudograph apply_step(const Pseudograph &L, const EliminationStep &s, int d) {
    Pseudograph next = (s.kind == EliminationStep::Kind::vertex)
                           ? apply_vertex_step(L, s, d)
                           : apply_path_step(L, s, d);
    if (next.hanging_total() - L.hanging_total() != s.equilibrium)
        throw IntegrityError("hanging-edge balance does not match the step equilibrium");
    return next;
}

namespace {

// 0 or 1 for a connected pseudograph whose normal subgraph is a tree.
int tree_orientations(const Pseudograph &C, int d) {
    const OrientationCount oc = count_valid_orientations(C, d);
    if (oc.count > 1)
        throw IntegrityError("tree base case with more than one orientation");
    return static_cast<int>(oc.count.get_si());
}

} // namespace

EliminationTrace eliminate(const Pseudograph &L, int d, Deadline deadline) {
    if (d < 2)
        throw std::invalid_argument("dimension must be at least 2");

    EliminationTrace trace;
    if (L.n_vertices() == 0) {
        trace.terminals.push_back({TerminalInfo::Kind::empty, {}, 1});
        return trace;
    }

    for (Pseudograph comp : connected_components(L)) {
        for (;;) {
            if (deadline.expired())
                throw TimeoutError("elimination");

            if (comp.n_normal_edges() + comp.hanging_total() != d * comp.n_vertices()) {
                trace.terminals.push_back({TerminalInfo::Kind::dead, comp.vertices(), 0});
                trace.zero_count = true;
                break;
            }
            bool dead = false;
            for (int v : comp.vertices()) {
                const auto [p, h] = comp.extended_degree(v);
                if (p < d || h > d) {
                    dead = true;
                    break;
                }
            }
            if (dead) {
                trace.terminals.push_back({TerminalInfo::Kind::dead, comp.vertices(), 0});
                trace.zero_count = true;
                break;
            }
            if (normal_subgraph_is_tree(comp)) {
                TerminalInfo t;
                t.kind = comp.n_vertices() == 1 ? TerminalInfo::Kind::single_vertex
                                                : TerminalInfo::Kind::tree;
                t.vertices = comp.vertices();
                t.orientations = tree_orientations(comp, d);
                trace.zero_count = trace.zero_count || t.orientations == 0;
                trace.terminals.push_back(std::move(t));
                break;
            }

            EliminationStep step = select_step(comp, d);
            trace.product_bound *= step.cost;
            comp = apply_step(comp, step, d);
            trace.steps.push_back(std::move(step));
        }
    }
    return trace;
}

double formula_bound(int n, int k, int d, const AlphaBeta &ab) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("formula bound needs n >= 1 and k >= 1");
    if (ab.d != d)
        throw std::invalid_argument("alpha/beta computed for a different dimension");
    return std::exp(n * ab.ln_alpha + (k - 1) * ab.ln_beta);
}

} // namespace rigi
