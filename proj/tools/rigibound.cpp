// Command-line front end: ingest edge-list graphs, check rigidity counts,
// compute orientation counts and all embedding bounds, emit reports.
//
// Exit codes: 0 success, 2 usage or parse error, 3 rigidity-check failure,
// 4 timeout (partial report emitted).

#include "rigi/bigint.hpp"
#include "rigi/bounds.hpp"
#include "rigi/errors.hpp"
#include "rigi/graph.hpp"
#include "rigi/report.hpp"
#include "rigi/rigidity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRigidity = 3;
constexpr int kExitTimeout = 4;

int env_threads() {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0)
        workers = 1;
    if (const char *env = std::getenv("RIGIBOUND_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && cap <= 64)
            workers = static_cast<unsigned>(cap);
    }
    return static_cast<int>(workers);
}

std::string read_input(const std::string &path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string &out_path, const std::string &content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + out_path);
    out << content;
}

struct CommonOpts {
    std::string input;
    std::string out_path;
    std::string format = "text";
    int d = 2;
    double time_limit = 30.0;
    std::uint64_t seed = 0;
    std::string clique = "best";
    bool force = false;
    bool no_backtracking = false;
    bool no_permanent = false;
    bool no_elimination = false;
    bool no_formulas = false;
};

rigi::AnalysisOptions to_analysis_options(const CommonOpts &c) {
    rigi::AnalysisOptions opts;
    opts.d = c.d;
    opts.time_limit_s = c.time_limit;
    opts.threads = env_threads();
    opts.force = c.force;
    opts.methods.backtracking = !c.no_backtracking;
    opts.methods.permanent = !c.no_permanent;
    opts.methods.elimination = !c.no_elimination;
    opts.methods.formulas = !c.no_formulas;

    if (c.clique == "best" || c.clique == "all") {
        opts.policy = rigi::CliquePolicy::best; // same work; rendering differs
    } else {
        opts.policy = rigi::CliquePolicy::explicit_members;
        std::stringstream ss(c.clique);
        std::string tok;
        while (std::getline(ss, tok, ','))
            opts.explicit_clique.push_back(std::stoi(tok));
    }
    return opts;
}

int cmd_check(const CommonOpts &c) {
    if (c.format == "csv") {
        std::cerr << "check does not support csv output\n";
        return kExitUsage;
    }
    const rigi::Graph g = rigi::parse_graph(read_input(c.input));
    const rigi::MaxwellReport rep = rigi::maxwell_check(g, c.d);
    const auto cliques = rigi::find_cliques(g, c.d);

    std::ostringstream out;
    if (c.format == "json") {
        json j{{"d", c.d},
               {"n", g.n_vertices()},
               {"m", g.n_edges()},
               {"count_ok", rep.count_ok},
               {"sparsity_ok", rep.sparsity_ok},
               {"global_ok", rep.global_ok},
               {"necessary_only", rep.necessary_only},
               {"exhaustive", rep.subgraph_check_exhaustive},
               {"cliques", cliques.size()},
               {"message", rep.message}};
        if (rep.violating_subgraph)
            j["violating_subgraph"] = *rep.violating_subgraph;
        out << j.dump(2) << "\n";
    } else {
        if (c.d == 2)
            out << "laman: " << (rep.global_ok ? "yes" : "no");
        else
            out << "maxwell(necessary): " << (rep.global_ok ? "pass" : "fail");
        out << "; " << c.d << "-cliques: " << cliques.size();
        if (rep.global_ok && c.d == 3 && cliques.empty())
            out << "; fallback K2' profile available";
        out << "\n";
        if (!rep.message.empty())
            out << rep.message << "\n";
        if (rep.violating_subgraph) {
            out << "violating subgraph:";
            for (int v : *rep.violating_subgraph)
                out << " " << v;
            out << "\n";
        }
    }
    write_output(c.out_path, out.str());
    return rep.global_ok ? kExitOk : kExitRigidity;
}

int cmd_bound(const CommonOpts &c) {
    if (c.format == "csv") {
        std::cerr << "bound does not support csv output; use compare for CSV\n";
        return kExitUsage;
    }
    const rigi::Graph g = rigi::parse_graph(read_input(c.input));
    rigi::BoundReport rep;
    try {
        rep = rigi::analyze(g, to_analysis_options(c));
    } catch (const rigi::RigidityGateError &e) {
        std::cerr << "rigidity check failed: " << e.what()
                  << " (use --force to bound anyway)\n";
        return kExitRigidity;
    }

    std::ostringstream out;
    if (c.format == "json")
        out << rigi::report_to_json(rep).dump(2) << "\n";
    else
        out << rigi::report_to_text(rep);
    write_output(c.out_path, out.str());

    for (const auto &f : rep.flags)
        if (f.rfind("timeout:", 0) == 0)
            return kExitTimeout;
    return kExitOk;
}

int cmd_table1(const CommonOpts &c, int max_d) {
    const auto rows = rigi::table1(2, max_d);
    std::ostringstream out;
    if (c.format == "csv") {
        out << "d,this,bm,bezout\n";
        for (const auto &r : rows)
            out << r.d << ',' << rigi::format_sig5(r.this_basis) << ','
                << rigi::format_sig5(r.bm) << ',' << rigi::format_sig5(r.bezout) << "\n";
    } else {
        auto row = [&](const char *label, auto value) {
            out << std::left << std::setw(6) << label;
            for (const auto &r : rows)
                out << std::right << std::setw(9) << value(r);
            out << "\n";
        };
        row("d", [](const rigi::Table1Row &r) { return std::to_string(r.d); });
        row("this", [](const rigi::Table1Row &r) { return rigi::format_sig5(r.this_basis); });
        row("B-M", [](const rigi::Table1Row &r) { return rigi::format_sig5(r.bm); });
        row("Bez.", [](const rigi::Table1Row &r) { return rigi::format_sig5(r.bezout); });
    }
    write_output(c.out_path, out.str());
    return kExitOk;
}

int cmd_gen(const CommonOpts &c, int n) {
    const rigi::Graph g = rigi::henneberg1_generate(n, c.d, c.seed);
    std::ostringstream out;
    out << "# henneberg n=" << n << " d=" << c.d << " seed=" << c.seed << "\n";
    out << rigi::serialize_graph(g);
    write_output(c.out_path, out.str());
    std::cerr << "seed: " << c.seed << "\n";
    return kExitOk;
}

std::string q(const std::string &s) {
    // CSV quoting for fields that might carry separators.
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string r = "\"";
    for (char ch : s)
        r += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
    return r + "\"";
}

int cmd_compare(const CommonOpts &c, const std::string &dir) {
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::ostringstream out;
    out << "file,n,m,d,fixture,profile,exact_count,orientation_bound,"
           "elimination_bound,corollary_bound,closed_printed,closed_literal,"
           "bregman_minc_eq2,bezout,borcea_streinu,"
           "ratio_elimination,ratio_corollary,ratio_closed,violations\n";

    if (files.empty())
        std::cerr << "warning: no files in " << dir << "\n";

    size_t failures = 0;
    bool any_timeout = false;
    for (const auto &file : files) {
        rigi::BoundReport rep;
        try {
            const rigi::Graph g = rigi::parse_graph(read_input(file.string()));
            rep = rigi::analyze(g, to_analysis_options(c));
        } catch (const std::exception &e) {
            std::cerr << "warning: skipping " << file.filename().string() << ": "
                      << e.what() << "\n";
            ++failures;
            continue;
        }

        std::string fixture = "-", profile = "no", exact = "-", obound = "-",
                    elim = "-", coroll = "-", bm = "-";
        std::string ratio_elim = "-", ratio_coroll = "-", ratio_closed = "-";
        std::vector<std::string> violations;
        if (rep.best_index) {
            const auto &f = rep.fixtures[*rep.best_index];
            std::ostringstream fx;
            for (size_t i = 0; i < f.fixture.size(); ++i)
                fx << (i ? " " : "") << f.fixture[i];
            if (f.partially_fixed) {
                fx << " |pf " << *f.partially_fixed;
                profile = "yes";
            }
            fixture = fx.str();
            if (f.exact_count)
                exact = f.exact_count->get_str();
            if (f.orientation_bound)
                obound = f.orientation_bound->get_str();
            if (f.trace) {
                elim = f.trace->product_bound.get_str();
                if (f.exact_count) {
                    const bool claims_zero = f.trace->zero_count;
                    if ((claims_zero && *f.exact_count > 0) ||
                        (!claims_zero && f.trace->product_bound < *f.exact_count))
                        violations.push_back("elimination");
                    if (*f.exact_count > 0)
                        ratio_elim = rigi::format_sig5(f.trace->product_bound.get_d() /
                                                       f.exact_count->get_d());
                }
            }
            if (f.corollary) {
                coroll = rigi::format_sig5(*f.corollary);
                if (f.exact_count &&
                    f.exact_count->get_d() > *f.corollary * (1.0 + 1e-9))
                    violations.push_back("corollary");
                if (f.exact_count && *f.exact_count > 0)
                    ratio_coroll =
                        rigi::format_sig5(*f.corollary / f.exact_count->get_d());
            }
            if (f.bm_eq2)
                bm = rigi::format_sig5(*f.bm_eq2);
            // The closed-form constants assume the pseudograph can host a
            // multi-vertex component; the smallest sizes cannot.
            const int min_n = rep.d == 2 ? rep.d + 2 : rep.d + 3;
            if (rep.closed_form && f.orientation_bound &&
                rep.graph.n_vertices() >= min_n) {
                if (f.orientation_bound->get_d() >
                    rep.closed_form->printed * (1.0 + 1e-9))
                    violations.push_back("closed_form");
            }
            if (rep.closed_form && f.orientation_bound && *f.orientation_bound > 0)
                ratio_closed = rigi::format_sig5(rep.closed_form->printed /
                                                 f.orientation_bound->get_d());
        }
        for (const auto &fl : rep.flags)
            if (fl.rfind("timeout:", 0) == 0)
                any_timeout = true;

        std::string viol;
        for (size_t i = 0; i < violations.size(); ++i)
            viol += (i ? ";" : "") + violations[i];

        out << q(file.filename().string()) << ',' << rep.graph.n_vertices() << ','
            << rep.graph.n_edges() << ',' << rep.d << ',' << q(fixture) << ','
            << profile << ',' << exact << ',' << obound << ',' << elim << ','
            << coroll << ','
            << (rep.closed_form ? rigi::format_sig5(rep.closed_form->printed) : "-")
            << ','
            << (rep.closed_form ? rigi::format_sig5(rep.closed_form->literal) : "-")
            << ',' << bm << ','
            << (rep.bezout ? rigi::format_sig5(*rep.bezout) : "-") << ','
            << (rep.borcea_streinu ? rep.borcea_streinu->get_str() : "-") << ','
            << ratio_elim << ',' << ratio_coroll << ',' << ratio_closed << ','
            << q(viol) << "\n";
    }
    write_output(c.out_path, out.str());
    if (!files.empty() && failures == files.size())
        return kExitUsage;
    return any_timeout ? kExitTimeout : kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"rigibound: certified upper bounds on embeddings of minimally "
                 "rigid graphs via outdegree-constrained orientations"};
    app.require_subcommand(1);

    CommonOpts c;
    int max_d = 9;
    int gen_n = 0;
    std::string compare_dir;

    auto add_common = [&](CLI::App *sub, bool with_input) {
        if (with_input)
            sub->add_option("input", c.input, "edge-list file, or - for stdin")
                ->required();
        sub->add_option("--dim", c.d, "embedding dimension d (>= 2)")
            ->check(CLI::Range(2, 64));
        sub->add_option("--format", c.format, "text|json|csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", c.out_path, "write output to this file");
        sub->add_option("--time-limit", c.time_limit, "per-method time limit, seconds")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", c.seed, "RNG seed");
    };

    CLI::App *check = app.add_subcommand("check", "rigidity counts and clique census");
    add_common(check, true);

    CLI::App *bound = app.add_subcommand("bound", "orientation counts and all bounds");
    add_common(bound, true);
    bound->add_option("--clique", c.clique,
                      "all|best|v1,v2,... fixture selection policy");
    bound->add_flag("--force", c.force, "bound even if the rigidity check fails");
    bound->add_flag("--no-backtracking", c.no_backtracking, "skip exact counting");
    bound->add_flag("--no-permanent", c.no_permanent, "skip the permanent cross-check");
    bound->add_flag("--no-elimination", c.no_elimination, "skip elimination traces");
    bound->add_flag("--no-formulas", c.no_formulas, "skip closed-form bounds");

    CLI::App *table = app.add_subcommand("table1", "power-basis comparison table");
    add_common(table, false);
    table->add_option("--max-d", max_d, "largest dimension")->check(CLI::Range(2, 64));

    CLI::App *gen = app.add_subcommand("gen", "generate a minimally rigid test graph");
    add_common(gen, false);
    gen->add_option("--n", gen_n, "vertex count (>= d+1)")->required();

    CLI::App *compare = app.add_subcommand("compare", "batch bounds over a directory");
    compare->add_option("dir", compare_dir, "directory of edge-list files")->required();
    add_common(compare, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(c);
        if (bound->parsed())
            return cmd_bound(c);
        if (table->parsed())
            return cmd_table1(c, max_d);
        if (gen->parsed())
            return cmd_gen(c, gen_n);
        if (compare->parsed())
            return cmd_compare(c, compare_dir);
    } catch (const rigi::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
