#ifndef RIGI_GRAPH_HPP
#define RIGI_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rigi {

using Edge = std::pair<int, int>; // stored normalized, first < second

// Undirected simple graph over arbitrary nonnegative integer vertex labels.
// Labels are preserved verbatim; dense indices are internal only.
class Graph {
public:
    Graph() = default;

    // Validates: no self-loops, no duplicate edges, endpoints among vertices.
    Graph(std::vector<int> vertices, std::vector<Edge> edges);

    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<int> &vertices() const { return vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    std::span<const int> neighbors(int v) const; // sorted labels
    int degree(int v) const;

    // Dense index of a label, for algorithms that want arrays.
    int index_of(int v) const;
    int label_of(int idx) const { return vertices_[idx]; }

    bool operator==(const Graph &other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::vector<int> vertices_;          // sorted, unique
    std::vector<Edge> edges_;            // normalized, sorted, unique
    std::vector<int> adj_;               // concatenated sorted neighbor labels
    std::vector<int> adj_offset_;        // per vertex index, size n+1
};

// Edge-list document: first line "<n> <m>", then m lines "<u> <v>".
// Lines starting with '#' are comments; LF and CRLF both accepted.
// Declared vertices are labels 1..n; edge endpoints are unioned in.
Graph parse_graph(const std::string &text);

// Canonical document for a graph whose vertex set is exactly {1..n}.
// Throws std::invalid_argument for other label sets.
std::string serialize_graph(const Graph &g);

// All d-cliques in lexicographic order of their sorted member lists.
std::vector<std::vector<int>> find_cliques(const Graph &g, int d);

// Checks that `members` spans a complete subgraph of g.
bool is_clique(const Graph &g, const std::vector<int> &members);

// Vertex-addition construction: start from K_{d+1} on labels 1..d+1, then
// join each new vertex to d distinct existing ones chosen by the seeded RNG.
// Deterministic for a fixed seed.
Graph henneberg1_generate(int n, int d, std::uint64_t seed);

} // namespace rigi

#endif // RIGI_GRAPH_HPP
