#ifndef RIGI_ELIMINATION_HPP
#define RIGI_ELIMINATION_HPP

#include "rigi/deadline.hpp"
#include "rigi/pseudograph.hpp"

#include <cstdint>
#include <gmpxx.h>
#include <vector>

namespace rigi {

struct AlphaBeta; // bounds.hpp

// Cost and hanging-edge balance of removing one vertex of extended degree
// (p,h) at fixed outdegree d.
struct StepCost {
    std::int64_t cost = 0;
    int equilibrium = 0;
};

// cost = C(p-h, d-h), equilibrium = p - h - d. Throws for the forbidden
// degree (d+1, d-1), which only path elimination may remove, and for
// degrees p < d or h > d that admit no orientation at all.
StepCost step_cost_equilibrium(int p, int h, int d);

struct EliminationStep {
    enum class Kind { vertex, path };
    Kind kind = Kind::vertex;
    std::vector<int> vertices; // single vertex, or the path in order
    int p = 0, h = 0;          // extended degree at elimination time (vertex steps)
    std::int64_t cost = 0;
    int equilibrium = 0;
};

// Chooses the next step for a connected non-base pseudograph:
//  - a non-cut vertex of degree other than (d+1,d-1) when one exists
//    (minimum cost, then smallest label);
//  - otherwise a maximal run of (d+1,d-1)-vertices of normal degree 2 inside
//    the first leaf block of the block-cut tree (lexicographically smallest).
// Either way the remainder stays connected.
EliminationStep select_step(const Pseudograph &L, int d);

// Applies a step to its canonical successor: the eliminated vertex or path
// disappears with its hanging edges; of its normal edges, the required
// number is deleted (toward smallest-labeled neighbors) and the rest become
// hanging at their surviving endpoint.
Pseudograph apply_step(const Pseudograph &L, const EliminationStep &s, int d);

struct TerminalInfo {
    enum class Kind { empty, single_vertex, tree, dead };
    Kind kind = Kind::empty;
    std::vector<int> vertices;
    int orientations = 0; // 0 or 1 for tree/single-vertex base cases
};

// Certificate for one elimination run: the product of step costs bounds the
// number of valid orientations, checked empirically against exact counts.
struct EliminationTrace {
    std::vector<EliminationStep> steps;
    mpz_class product_bound = 1;
    std::vector<TerminalInfo> terminals; // one per connected component
    bool zero_count = false;             // a no-orientation state was reached
};

// Runs select/apply to a base case on every connected component;
// concatenates steps and multiplies cost products.
EliminationTrace eliminate(const Pseudograph &L, int d, Deadline deadline = {});

// alpha_d^n * beta_d^(k-1), the proved bound on the orientation count of a
// connected pseudograph with n vertices and k hanging edges.
double formula_bound(int n, int k, int d, const AlphaBeta &ab);

} // namespace rigi

#endif // RIGI_ELIMINATION_HPP
