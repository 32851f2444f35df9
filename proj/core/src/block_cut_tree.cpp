#include "rigi/block_cut_tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rigi {

bool BlockCutTree::is_cut_vertex(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockCutTree::leaf_blocks() const {
    std::vector<int> cut_count(blocks.size(), 0);
    for (const auto &[b, cv] : incidences) {
        (void)cv;
        ++cut_count[b];
    }
    std::vector<int> out;
    for (size_t b = 0; b < blocks.size(); ++b)
        if (cut_count[b] <= 1)
            out.push_back(static_cast<int>(b));
    return out;
}

namespace {

// Lowpoint decomposition into biconnected components. Works on dense
// indices; tracks edge ids so parallel edges form a proper block instead of
// being skipped as the tree edge back to the parent.
class BiconnectedDecomposer {
public:
    BiconnectedDecomposer(int n, const std::vector<std::pair<int, int>> &edges)
        : n_(n), disc_(n, 0), low_(n, 0) {
        adj_.resize(n);
        for (size_t e = 0; e < edges.size(); ++e) {
            adj_[edges[e].first].emplace_back(static_cast<int>(e), edges[e].second);
            adj_[edges[e].second].emplace_back(static_cast<int>(e), edges[e].first);
        }
        edges_ = edges;
    }

    // Returns blocks as sorted index sets. Requires a connected input;
    // isolated single vertex yields one singleton block.
    std::vector<std::vector<int>> run() {
        if (n_ == 0)
            return {};
        dfs(0, -1);
        if (n_ == 1 && blocks_.empty())
            blocks_.push_back({0});
        return blocks_;
    }

private:
    void dfs(int u, int parent_edge) {
        disc_[u] = low_[u] = ++timer_;
        for (const auto &[e, w] : adj_[u]) {
            if (e == parent_edge)
                continue;
            if (disc_[w] == 0) {
                estack_.push_back(e);
                dfs(w, e);
                low_[u] = std::min(low_[u], low_[w]);
                if (low_[w] >= disc_[u])
                    pop_block(e);
            } else if (disc_[w] < disc_[u]) {
                estack_.push_back(e);
                low_[u] = std::min(low_[u], disc_[w]);
            }
        }
    }

    void pop_block(int tree_edge) {
        std::set<int> members;
        for (;;) {
            const int e = estack_.back();
            estack_.pop_back();
            members.insert(edges_[e].first);
            members.insert(edges_[e].second);
            if (e == tree_edge)
                break;
        }
        blocks_.emplace_back(members.begin(), members.end());
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<int> disc_, low_;
    std::vector<int> estack_;
    std::vector<std::vector<int>> blocks_;
    int timer_ = 0;
};

BlockCutTree assemble(int n, const std::vector<std::pair<int, int>> &index_edges,
                      const std::vector<int> &labels) {
    BiconnectedDecomposer decomposer(n, index_edges);
    auto raw_blocks = decomposer.run();

    BlockCutTree t;
    std::vector<int> membership(n, 0);
    for (auto &blk : raw_blocks)
        for (int v : blk)
            ++membership[v];

    // A vertex on two or more blocks separates them.
    for (int v = 0; v < n; ++v)
        if (membership[v] >= 2)
            t.cut_vertices.push_back(labels[v]);
    std::sort(t.cut_vertices.begin(), t.cut_vertices.end());

    // Deterministic block order: by sorted member labels.
    for (auto &blk : raw_blocks) {
        BlockCutTree::Block b;
        for (int v : blk)
            b.vertices.push_back(labels[v]);
        std::sort(b.vertices.begin(), b.vertices.end());
        t.blocks.push_back(std::move(b));
    }
    std::sort(t.blocks.begin(), t.blocks.end(),
              [](const auto &a, const auto &b) { return a.vertices < b.vertices; });

    for (size_t b = 0; b < t.blocks.size(); ++b)
        for (int v : t.blocks[b].vertices)
            if (t.is_cut_vertex(v))
                t.incidences.emplace_back(static_cast<int>(b), v);
    return t;
}

bool indices_connected(int n, const std::vector<std::pair<int, int>> &edges) {
    if (n <= 1)
        return true;
    std::vector<std::vector<int>> adj(n);
    for (const auto &[a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

} // namespace

BlockCutTree block_cut_tree(const Graph &g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.n_edges());
    for (const auto &[u, v] : g.edges())
        edges.emplace_back(g.index_of(u), g.index_of(v));
    if (!indices_connected(g.n_vertices(), edges))
        throw std::invalid_argument("graph is disconnected; split into components first");
    return assemble(g.n_vertices(), edges, g.vertices());
}

BlockCutTree block_cut_tree(const Pseudograph &L) {
    const auto &vs = L.vertices();
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(L.n_normal_edges());
    for (const auto &[u, v] : L.normal_edges())
        edges.emplace_back(index_of(u), index_of(v));
    if (!indices_connected(L.n_vertices(), edges))
        throw std::invalid_argument("pseudograph is disconnected; split into components first");
    return assemble(L.n_vertices(), edges, vs);
}

} // namespace rigi
