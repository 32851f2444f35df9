#ifndef RIGI_BLOCK_CUT_TREE_HPP
#define RIGI_BLOCK_CUT_TREE_HPP

#include "rigi/graph.hpp"
#include "rigi/pseudograph.hpp"

#include <utility>
#include <vector>

namespace rigi {

// Tree of biconnected components (blocks) and cut vertices of a connected
// graph. Incidences join a block to each cut vertex it contains.
struct BlockCutTree {
    struct Block {
        std::vector<int> vertices; // sorted labels
    };

    std::vector<Block> blocks;
    std::vector<int> cut_vertices;                 // sorted labels
    std::vector<std::pair<int, int>> incidences;   // (block index, cut vertex label)

    bool is_cut_vertex(int v) const;
    int n_nodes() const {
        return static_cast<int>(blocks.size() + cut_vertices.size());
    }
    // Blocks containing at most one cut vertex (tree leaves, or the root of
    // a single-block graph).
    std::vector<int> leaf_blocks() const;
};

// Throws std::invalid_argument when g is disconnected; split first.
BlockCutTree block_cut_tree(const Graph &g);

// Same decomposition for the normal subgraph of a connected pseudograph.
// Handles parallel normal edges (a doubled edge is a block, not a bridge).
BlockCutTree block_cut_tree(const Pseudograph &L);

} // namespace rigi

#endif // RIGI_BLOCK_CUT_TREE_HPP
