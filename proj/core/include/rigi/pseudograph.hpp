#ifndef RIGI_PSEUDOGRAPH_HPP
#define RIGI_PSEUDOGRAPH_HPP

#include "rigi/graph.hpp"

#include <map>
#include <vector>

namespace rigi {

// Total degree p and hanging degree h of a pseudograph vertex.
struct ExtendedDegree {
    int p = 0;
    int h = 0;
    bool operator==(const ExtendedDegree &) const = default;
};

// Vertex set U with normal edges F (two endpoints in U, stored as a
// multiset) and hanging edges H (single endpoint, always directed out of
// it, stored as per-vertex counts). Immutable after construction.
class Pseudograph {
public:
    Pseudograph() = default;
    Pseudograph(std::vector<int> vertices, std::vector<Edge> normal_edges,
                std::map<int, int> hanging);

    const std::vector<int> &vertices() const { return vertices_; }
    const std::vector<Edge> &normal_edges() const { return normal_edges_; }
    const std::map<int, int> &hanging() const { return hanging_; }

    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    int n_normal_edges() const { return static_cast<int>(normal_edges_.size()); }
    int hanging_total() const;

    bool has_vertex(int v) const;
    int normal_degree(int v) const;
    int hanging_count(int v) const; // 0 when v has no entry
    ExtendedDegree extended_degree(int v) const;

    bool operator==(const Pseudograph &) const = default;

private:
    std::vector<int> vertices_;     // sorted, unique
    std::vector<Edge> normal_edges_; // normalized, sorted; duplicates allowed
    std::map<int, int> hanging_;     // only positive counts stored
};

// Removes the fixture vertices from g: U = V \ members, F = edges disjoint
// from the fixture, H counts edges from a surviving vertex into the fixture.
// `fixture` must be a clique of g (any size >= 1).
Pseudograph build_pseudograph(const Graph &g, const std::vector<int> &fixture);

// Partition by connectivity of the normal subgraph; hanging edges travel
// with their vertex. Ordered by smallest vertex label.
std::vector<Pseudograph> connected_components(const Pseudograph &L);

// True when the normal subgraph is connected and acyclic (single vertices
// included). False for empty or disconnected pseudographs.
bool normal_subgraph_is_tree(const Pseudograph &L);

} // namespace rigi

#endif // RIGI_PSEUDOGRAPH_HPP
