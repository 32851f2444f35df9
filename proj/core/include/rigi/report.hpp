#ifndef RIGI_REPORT_HPP
#define RIGI_REPORT_HPP

#include "rigi/bounds.hpp"
#include "rigi/elimination.hpp"
#include "rigi/graph.hpp"
#include "rigi/rigidity.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigi {

struct MethodToggles {
    bool backtracking = true;
    bool permanent = true;
    bool elimination = true;
    bool formulas = true;
};

enum class CliquePolicy { best, all, explicit_members };

struct AnalysisOptions {
    int d = 2;
    CliquePolicy policy = CliquePolicy::best;
    std::vector<int> explicit_clique; // used with CliquePolicy::explicit_members
    MethodToggles methods;
    double time_limit_s = 30.0; // per method, not per run
    int threads = 1;
    bool force = false;          // run even when the rigidity check fails
    int max_fixtures = 200;
    int permanent_side_limit = 30; // Ryser refuses larger matrices
};

// Raised when the input fails the rigidity gate and `force` is off.
struct RigidityGateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything computed for one fixed clique (or one K2'-style fixture when
// d = 3 and the graph is triangle-free: a fixed edge plus a partially fixed
// vertex of outdegree 2).
struct FixtureResult {
    std::vector<int> fixture;
    std::optional<int> partially_fixed;
    std::optional<mpz_class> exact_count;       // B by backtracking
    std::optional<mpz_class> permanent;         // per(A)
    std::optional<mpq_class> permanent_b;       // per / (d!)^(|V|-d)
    std::optional<mpz_class> orientation_bound; // 2^(|V|-d) B, or 2^(|V|-3) B for K2'
    std::optional<EliminationTrace> trace;
    std::optional<double> corollary;            // per-component formula bound on B
    std::optional<double> bm_eq2;               // Bregman-Minc on this pseudograph
    std::vector<std::pair<int, int>> components; // (n_i, k_i)
    std::vector<std::string> timeouts;           // method names that ran out of time
    std::vector<std::string> notes;
};

struct BoundReport {
    Graph graph;
    int d = 2;
    MaxwellReport rigidity;
    std::vector<FixtureResult> fixtures;
    std::optional<std::size_t> best_index; // fixture minimizing the orientation bound
    std::optional<double> bezout;
    std::optional<mpq_class> borcea_streinu;
    std::optional<NewClosedBound> closed_form;
    double bm_basis_value = 0.0;
    double power_basis = 0.0; // 2 alpha_d
    std::vector<std::string> flags;
};

// Full pipeline: rigidity gate, fixture enumeration under the clique
// policy, per-fixture counting/bounding, closed forms.
BoundReport analyze(const Graph &g, const AnalysisOptions &opts);

nlohmann::json report_to_json(const BoundReport &r);
BoundReport report_from_json(const nlohmann::json &j);
std::string report_to_text(const BoundReport &r);

nlohmann::json trace_to_json(const EliminationTrace &t);
EliminationTrace trace_from_json(const nlohmann::json &j);

// Shortest representation that survives a 12-significant-digit print.
double round12(double x);

} // namespace rigi

#endif // RIGI_REPORT_HPP
