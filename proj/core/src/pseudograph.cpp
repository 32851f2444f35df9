#include "rigi/pseudograph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rigi {

Pseudograph::Pseudograph(std::vector<int> vertices, std::vector<Edge> normal_edges,
                         std::map<int, int> hanging) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    vertices_ = std::move(vertices);

    for (auto &e : normal_edges) {
        if (e.first == e.second)
            throw std::invalid_argument("normal edge may not be a loop");
        if (e.first > e.second)
            std::swap(e.first, e.second);
        if (!has_vertex(e.first) || !has_vertex(e.second))
            throw std::invalid_argument("normal edge endpoint outside U");
    }
    std::sort(normal_edges.begin(), normal_edges.end());
    normal_edges_ = std::move(normal_edges);

    for (auto it = hanging.begin(); it != hanging.end();) {
        if (it->second < 0)
            throw std::invalid_argument("negative hanging count");
        if (!has_vertex(it->first))
            throw std::invalid_argument("hanging edge endpoint outside U");
        if (it->second == 0)
            it = hanging.erase(it);
        else
            ++it;
    }
    hanging_ = std::move(hanging);
}

bool Pseudograph::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Pseudograph::hanging_total() const {
    return std::accumulate(hanging_.begin(), hanging_.end(), 0,
                           [](int acc, const auto &kv) { return acc + kv.second; });
}

int Pseudograph::normal_degree(int v) const {
    if (!has_vertex(v))
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    int deg = 0;
    for (const auto &[a, b] : normal_edges_)
        deg += (a == v) + (b == v);
    return deg;
}

int Pseudograph::hanging_count(int v) const {
    if (!has_vertex(v))
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    auto it = hanging_.find(v);
    return it == hanging_.end() ? 0 : it->second;
}

ExtendedDegree Pseudograph::extended_degree(int v) const {
    const int h = hanging_count(v);
    return {normal_degree(v) + h, h};
}

Pseudograph build_pseudograph(const Graph &g, const std::vector<int> &fixture) {
    if (fixture.empty())
        throw std::invalid_argument("fixture must contain at least one vertex");
    for (int v : fixture)
        if (!g.has_vertex(v))
            throw std::invalid_argument("fixture vertex not in graph");
    if (!is_clique(g, fixture))
        throw std::invalid_argument("fixture is not a clique of the graph");

    std::vector<int> fixed(fixture.begin(), fixture.end());
    std::sort(fixed.begin(), fixed.end());
    auto is_fixed = [&](int v) {
        return std::binary_search(fixed.begin(), fixed.end(), v);
    };

    std::vector<int> u_set;
    for (int v : g.vertices())
        if (!is_fixed(v))
            u_set.push_back(v);

    std::vector<Edge> normal;
    std::map<int, int> hanging;
    for (const auto &[a, b] : g.edges()) {
        const bool fa = is_fixed(a), fb = is_fixed(b);
        if (fa && fb)
            continue; // fixture edge, consumed by the fixing
        if (!fa && !fb)
            normal.emplace_back(a, b);
        else
            ++hanging[fa ? b : a];
    }
    return Pseudograph(std::move(u_set), std::move(normal), std::move(hanging));
}

std::vector<Pseudograph> connected_components(const Pseudograph &L) {
    const auto &vs = L.vertices();
    const int n = L.n_vertices();
    if (n == 0)
        return {};

    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };

    // Union-find over the normal edges.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto &[a, b] : L.normal_edges())
        parent[find(index_of(a))] = find(index_of(b));

    // Scanning labels in ascending order numbers the components by their
    // smallest vertex.
    std::map<int, int> root_to_comp;
    std::vector<std::vector<int>> comp_vertices;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = root_to_comp.try_emplace(find(i),
                                                    static_cast<int>(comp_vertices.size()));
        if (fresh)
            comp_vertices.emplace_back();
        comp_vertices[it->second].push_back(vs[i]);
    }

    std::vector<std::vector<Edge>> comp_edges(comp_vertices.size());
    for (const auto &e : L.normal_edges())
        comp_edges[root_to_comp[find(index_of(e.first))]].push_back(e);

    std::vector<Pseudograph> out;
    for (size_t c = 0; c < comp_vertices.size(); ++c) {
        std::map<int, int> hang;
        for (int v : comp_vertices[c]) {
            const int h = L.hanging_count(v);
            if (h > 0)
                hang[v] = h;
        }
        out.emplace_back(comp_vertices[c], comp_edges[c], std::move(hang));
    }
    return out;
}

bool normal_subgraph_is_tree(const Pseudograph &L) {
    const int n = L.n_vertices();
    if (n == 0)
        return false;
    if (L.n_normal_edges() != n - 1)
        return false;
    return connected_components(L).size() == 1;
}

} // namespace rigi
