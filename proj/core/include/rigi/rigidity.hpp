#ifndef RIGI_RIGIDITY_HPP
#define RIGI_RIGIDITY_HPP

#include "rigi/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rigi {

// Outcome of the edge-count test |E| = d|V| - C(d+1,2) together with the
// subgraph inequality |E'| <= d|V'| - C(d+1,2).
//
// d == 2: decided exactly by a (2,3)-sparsity pebble game, so global_ok
// certifies minimal rigidity (Laman). d >= 3: the conditions are necessary
// only; `necessary_only` is set, and the subgraph sweep is exhaustive up to
// the size noted in `subgraph_check_exhaustive`.
struct MaxwellReport {
    int d = 0;
    bool count_ok = false;
    bool sparsity_ok = false;
    bool global_ok = false;
    bool necessary_only = false;
    bool subgraph_check_exhaustive = false;
    std::optional<std::vector<int>> violating_subgraph; // vertex labels
    std::string message;
};

MaxwellReport maxwell_check(const Graph &g, int d);

namespace detail {
// (2,3)-pebble game. Returns true iff g is (2,3)-sparse; on failure fills
// `violating` with a vertex set whose induced subgraph is overbraced.
bool pebble_game_2_3(const Graph &g, std::vector<int> &violating);
} // namespace detail

} // namespace rigi

#endif // RIGI_RIGIDITY_HPP
