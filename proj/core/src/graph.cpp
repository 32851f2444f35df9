#include "rigi/graph.hpp"

#include "rigi/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rigi {

namespace {

Edge normalized(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

} // namespace

Graph::Graph(std::vector<int> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    vertices_ = std::move(vertices);

    for (auto &e : edges) {
        if (e.first == e.second)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
        e = normalized(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);

    for (const auto &[u, v] : edges_) {
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("edge endpoint is not a listed vertex");
    }

    // CSR adjacency over dense indices.
    const int n = n_vertices();
    std::vector<int> deg(n, 0);
    for (const auto &[u, v] : edges_) {
        ++deg[index_of(u)];
        ++deg[index_of(v)];
    }
    adj_offset_.assign(n + 1, 0);
    for (int i = 0; i < n; ++i)
        adj_offset_[i + 1] = adj_offset_[i] + deg[i];
    adj_.resize(adj_offset_[n]);
    std::vector<int> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
    for (const auto &[u, v] : edges_) {
        adj_[cursor[index_of(u)]++] = v;
        adj_[cursor[index_of(v)]++] = u;
    }
    for (int i = 0; i < n; ++i)
        std::sort(adj_.begin() + adj_offset_[i], adj_.begin() + adj_offset_[i + 1]);
}

bool Graph::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Graph::index_of(int v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return static_cast<int>(it - vertices_.begin());
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v))
        return false;
    return std::binary_search(edges_.begin(), edges_.end(), normalized(u, v));
}

std::span<const int> Graph::neighbors(int v) const {
    const int i = index_of(v);
    return {adj_.data() + adj_offset_[i],
            static_cast<size_t>(adj_offset_[i + 1] - adj_offset_[i])};
}

int Graph::degree(int v) const {
    const int i = index_of(v);
    return adj_offset_[i + 1] - adj_offset_[i];
}

namespace {

bool parse_two_ints(const std::string &line, long &a, long &b) {
    const char *p = line.data();
    const char *end = p + line.size();
    auto skip_ws = [&] {
        while (p < end && (*p == ' ' || *p == '\t'))
            ++p;
    };
    skip_ws();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{})
        return false;
    p = r1.ptr;
    skip_ws();
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{})
        return false;
    p = r2.ptr;
    skip_ws();
    return p == end;
}

} // namespace

Graph parse_graph(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#')
            continue;

        long a, b;
        if (!parse_two_ints(line, a, b))
            throw ParseError(lineno, "expected two integers, got \"" + line + "\"");

        if (n < 0) {
            if (a < 0 || b < 0)
                throw ParseError(lineno, "vertex and edge counts must be nonnegative");
            if (a > 1000000 || b > 10000000)
                throw ParseError(lineno, "vertex/edge count beyond supported size");
            n = a;
            m = b;
            continue;
        }
        if (a < 0 || b < 0)
            throw ParseError(lineno, "vertex labels must be nonnegative");
        if (a > INT32_MAX || b > INT32_MAX)
            throw ParseError(lineno, "vertex label too large");
        if (a == b)
            throw ParseError(lineno, "self-loop at vertex " + std::to_string(a));
        if (static_cast<long>(edges.size()) == m)
            throw ParseError(lineno, "more edge lines than declared");
        Edge e = normalized(static_cast<int>(a), static_cast<int>(b));
        if (!seen.insert(e).second)
            throw ParseError(lineno, "duplicate edge (" + std::to_string(e.first) + "," +
                                          std::to_string(e.second) + ")");
        edges.push_back(e);
    }

    if (n < 0)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing header line \"<n> <m>\"");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));

    std::vector<int> vertices;
    for (long v = 1; v <= n; ++v)
        vertices.push_back(static_cast<int>(v));
    for (const auto &[u, v] : edges) {
        vertices.push_back(u);
        vertices.push_back(v);
    }
    return Graph(std::move(vertices), std::move(edges));
}

std::string serialize_graph(const Graph &g) {
    const auto &vs = g.vertices();
    for (int i = 0; i < g.n_vertices(); ++i) {
        if (vs[i] != i + 1)
            throw std::invalid_argument(
                "serialize_graph requires vertex labels 1..n; relabel first");
    }
    std::ostringstream out;
    out << g.n_vertices() << ' ' << g.n_edges() << '\n';
    for (const auto &[u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

bool is_clique(const Graph &g, const std::vector<int> &members) {
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!g.has_edge(members[i], members[j]))
                return false;
    std::set<int> uniq(members.begin(), members.end());
    return uniq.size() == members.size();
}

namespace {

void extend_clique(const Graph &g, std::vector<int> &current, int d,
                   std::vector<std::vector<int>> &out) {
    if (static_cast<int>(current.size()) == d) {
        out.push_back(current);
        return;
    }
    const int last = current.back();
    for (int cand : g.neighbors(last)) {
        if (cand <= last)
            continue;
        bool joined = true;
        for (int v : current) {
            if (!g.has_edge(v, cand)) {
                joined = false;
                break;
            }
        }
        if (joined) {
            current.push_back(cand);
            extend_clique(g, current, d, out);
            current.pop_back();
        }
    }
}

} // namespace

std::vector<std::vector<int>> find_cliques(const Graph &g, int d) {
    if (d < 2)
        throw std::invalid_argument("dimension must be at least 2");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    for (int v : g.vertices()) {
        current.assign(1, v);
        extend_clique(g, current, d, out);
    }
    return out; // lexicographic by construction: vertices ascending, extensions ascending
}

namespace {

// Unbiased bounded draw; avoids distribution objects so the stream is
// reproducible across standard library implementations.
std::uint64_t bounded_rand(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold)
            return r % bound;
    }
}

} // namespace

Graph henneberg1_generate(int n, int d, std::uint64_t seed) {
    if (d < 2)
        throw std::invalid_argument("dimension must be at least 2");
    if (n < d + 1)
        throw std::invalid_argument("need at least d+1 vertices");

    std::vector<int> vertices;
    std::vector<Edge> edges;
    for (int v = 1; v <= d + 1; ++v) {
        vertices.push_back(v);
        for (int u = 1; u < v; ++u)
            edges.emplace_back(u, v);
    }

    std::mt19937_64 rng(seed);
    for (int v = d + 2; v <= n; ++v) {
        // Partial Fisher-Yates over the existing labels 1..v-1.
        std::vector<int> pool(v - 1);
        for (int i = 0; i < v - 1; ++i)
            pool[i] = i + 1;
        for (int i = 0; i < d; ++i) {
            const std::uint64_t j =
                i + bounded_rand(rng, static_cast<std::uint64_t>(pool.size() - i));
            std::swap(pool[i], pool[j]);
            edges.emplace_back(std::min(pool[i], v), std::max(pool[i], v));
        }
        vertices.push_back(v);
    }
    return Graph(std::move(vertices), std::move(edges));
}

} // namespace rigi
