#ifndef RIGI_ORIENTATION_HPP
#define RIGI_ORIENTATION_HPP

#include "rigi/deadline.hpp"
#include "rigi/pseudograph.hpp"

#include <gmpxx.h>
#include <map>

namespace rigi {

// Required outdegree per vertex; hanging edges count toward their vertex.
struct OutdegreeProfile {
    std::map<int, int> required;
};

struct OrientationCount {
    mpz_class count;
    enum class Method { backtracking, permanent } method = Method::backtracking;
};

// Exact number of direction assignments to the normal edges such that every
// vertex has total outdegree d. Counts per connected component and
// multiplies. Returns 0 straight away when |F|+|H| != d|U| or some vertex
// has p < d or h > d.
//
// `threads` > 1 fans the subtree exploration out over that many workers;
// partial counts combine by addition, so the result does not depend on the
// worker count.
OrientationCount count_valid_orientations(const Pseudograph &L, int d, int threads = 1,
                                          Deadline deadline = {});

// Same search under a per-vertex outdegree requirement. The profile must
// cover every vertex of U.
OrientationCount count_with_profile(const Pseudograph &L, const OutdegreeProfile &profile,
                                    int threads = 1, Deadline deadline = {});

namespace detail {
// Forced-move propagation only, no branching: 0 when no valid orientation
// can exist, otherwise the product over vertices of C(undecided incident
// edges, residual outdegree) after the fixpoint. Used to rank the successor
// candidates of an elimination step.
mpz_class propagation_score(const Pseudograph &L, int d);
} // namespace detail

} // namespace rigi

#endif // RIGI_ORIENTATION_HPP
