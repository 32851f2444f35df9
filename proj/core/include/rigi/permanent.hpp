#ifndef RIGI_PERMANENT_HPP
#define RIGI_PERMANENT_HPP

#include "rigi/deadline.hpp"
#include "rigi/graph.hpp"

#include <gmpxx.h>
#include <vector>

namespace rigi {

// Permanent of a square nonnegative integer matrix by Ryser's
// inclusion-exclusion formula with Gray-code subset enumeration. Exact; the
// side is limited to 62 by the subset mask. Runtime O(2^n * n).
mpz_class ryser_permanent(const std::vector<std::vector<int>> &a, Deadline deadline = {});

// The 0/1 matrix whose rows are d copies of each non-fixed vertex's
// incidence row and whose columns are the edges outside the fixed clique.
// Throws when the result would not be square.
std::vector<std::vector<int>> replicated_incidence_matrix(const Graph &g,
                                                          const std::vector<int> &clique,
                                                          int d);

mpz_class incidence_permanent(const Graph &g, const std::vector<int> &clique, int d,
                              Deadline deadline = {});

// per / (d!)^(n_vertices - d) as an exact rational. Integral whenever the
// permanent came from a minimally rigid graph.
mpq_class b_from_permanent(const mpz_class &per, int n_vertices, int d);

// 2^(|V|-d) * B with B counted by backtracking on the pseudograph of the
// fixed clique.
mpz_class embedding_bound_orientations(const Graph &g, const std::vector<int> &clique,
                                       int d, int threads = 1, Deadline deadline = {});

} // namespace rigi

#endif // RIGI_PERMANENT_HPP
