#include "rigi/report.hpp"

#include "rigi/bigint.hpp"
#include "rigi/errors.hpp"
#include "rigi/orientation.hpp"
#include "rigi/permanent.hpp"
#include "rigi/pseudograph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace rigi {

using nlohmann::json;

double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

std::string mpz_str(const mpz_class &v) { return v.get_str(); }

std::string mpq_str(const mpq_class &q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class mpq_parse(const std::string &s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

void add_flag(std::vector<std::string> &flags, const std::string &f) {
    if (std::find(flags.begin(), flags.end(), f) == flags.end())
        flags.push_back(f);
}

struct FixtureSpec {
    std::vector<int> members;
    std::optional<int> partially_fixed;
};

FixtureResult process_fixture(const Graph &g, const FixtureSpec &spec,
                              const AnalysisOptions &opts, const AlphaBeta &ab,
                              bool certified, int threads) {
    FixtureResult r;
    r.fixture = spec.members;
    r.partially_fixed = spec.partially_fixed;

    const Pseudograph pseudo = build_pseudograph(g, spec.members);
    for (const Pseudograph &comp : connected_components(pseudo))
        r.components.emplace_back(comp.n_vertices(), comp.hanging_total());

    const bool profile_mode = spec.partially_fixed.has_value();
    const int d = opts.d;

    if (opts.methods.backtracking) {
        try {
            mpz_class b;
            if (profile_mode) {
                // Partially fixed vertex keeps 2 degrees of freedom.
                OutdegreeProfile prof;
                for (int v : pseudo.vertices())
                    prof.required[v] = (v == *spec.partially_fixed) ? 2 : d;
                b = count_with_profile(pseudo, prof, threads,
                                       Deadline::after(opts.time_limit_s))
                        .count;
            } else {
                b = count_valid_orientations(pseudo, d, threads,
                                             Deadline::after(opts.time_limit_s))
                        .count;
            }
            r.exact_count = b;
            r.orientation_bound =
                pow2(static_cast<unsigned long>(g.n_vertices() - d)) * b;
        } catch (const TimeoutError &) {
            r.timeouts.push_back("backtracking");
        }
    }

    if (profile_mode) {
        r.notes.push_back("profile fixture: permanent, elimination and formula "
                          "bounds are not applicable");
        return r;
    }

    if (opts.methods.permanent) {
        const long side = static_cast<long>(d) *
                          (g.n_vertices() - static_cast<long>(spec.members.size()));
        if (side > opts.permanent_side_limit) {
            r.notes.push_back("permanent skipped: matrix side " + std::to_string(side) +
                              " exceeds limit " +
                              std::to_string(opts.permanent_side_limit));
        } else {
            try {
                r.permanent = incidence_permanent(g, spec.members, d,
                                                  Deadline::after(opts.time_limit_s));
                r.permanent_b = b_from_permanent(*r.permanent, g.n_vertices(), d);
            } catch (const TimeoutError &) {
                r.timeouts.push_back("permanent");
            } catch (const std::invalid_argument &e) {
                // Non-rigid input under --force: the replicated matrix need
                // not be square.
                r.notes.push_back(std::string("permanent not applicable: ") + e.what());
            }
        }
    }

    if (opts.methods.elimination) {
        try {
            r.trace = eliminate(pseudo, d, Deadline::after(opts.time_limit_s));
        } catch (const TimeoutError &) {
            r.timeouts.push_back("elimination");
        }
    }

    if (opts.methods.formulas) {
        r.corollary = round12(corollary_bound(r.components, d, ab, certified));
        if (pseudo.n_vertices() >= 1)
            r.bm_eq2 = round12(
                bregman_minc(pseudo.n_vertices(), pseudo.hanging_total(), d).value);
    }
    return r;
}

} // namespace

BoundReport analyze(const Graph &g, const AnalysisOptions &opts) {
    if (opts.d < 2)
        throw std::invalid_argument("dimension must be at least 2");
    if (opts.time_limit_s <= 0)
        throw std::invalid_argument("time limit must be positive");
    if (opts.threads < 1)
        throw std::invalid_argument("thread count must be positive");
    if (g.n_vertices() < opts.d + 1)
        throw std::invalid_argument("graph needs at least d+1 vertices");

    BoundReport rep;
    rep.graph = g;
    rep.d = opts.d;
    rep.rigidity = maxwell_check(g, opts.d);
    if (!rep.rigidity.global_ok && !opts.force)
        throw RigidityGateError(rep.rigidity.message.empty() ? "rigidity check failed"
                                                             : rep.rigidity.message);
    if (rep.rigidity.necessary_only)
        add_flag(rep.flags, "necessary-only");
    if (!rep.rigidity.global_ok)
        add_flag(rep.flags, "rigidity-forced");

    const auto cliques = find_cliques(g, opts.d);
    std::vector<FixtureSpec> specs;
    if (opts.policy == CliquePolicy::explicit_members) {
        if (static_cast<int>(opts.explicit_clique.size()) != opts.d ||
            !is_clique(g, opts.explicit_clique))
            throw std::invalid_argument("explicit fixture is not a d-clique of the graph");
        std::vector<int> members = opts.explicit_clique;
        std::sort(members.begin(), members.end());
        specs.push_back({members, std::nullopt});
    } else if (!cliques.empty()) {
        for (const auto &c : cliques)
            specs.push_back({c, std::nullopt});
    } else if (opts.d == 3) {
        // Triangle-free: fix an edge, pick a partially fixed third vertex of
        // outdegree 2, count with outdegree 3 elsewhere.
        for (const auto &[u, v] : g.edges())
            for (int w : g.vertices())
                if (w != u && w != v)
                    specs.push_back({{u, v}, w});
        add_flag(rep.flags, "profile");
    } else {
        add_flag(rep.flags, "no-fixture");
    }
    if (static_cast<int>(specs.size()) > opts.max_fixtures) {
        specs.resize(opts.max_fixtures);
        add_flag(rep.flags, "fixture-cap");
    }

    const AlphaBeta ab = alpha_beta(opts.d);
    // The per-component hanging-edge minima are theorems only when the
    // subgraph inequalities were actually verified.
    const bool certified =
        rep.rigidity.global_ok && rep.rigidity.subgraph_check_exhaustive;

    rep.fixtures.resize(specs.size());
    if (opts.threads > 1 && specs.size() > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(specs.size());
        const int workers =
            std::min<int>(opts.threads, static_cast<int>(specs.size()));
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= specs.size())
                        return;
                    try {
                        rep.fixtures[i] =
                            process_fixture(g, specs[i], opts, ab, certified, 1);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
        for (auto &t : pool)
            t.join();
        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    } else {
        for (std::size_t i = 0; i < specs.size(); ++i)
            rep.fixtures[i] =
                process_fixture(g, specs[i], opts, ab, certified, opts.threads);
    }

    for (std::size_t i = 0; i < rep.fixtures.size(); ++i) {
        const auto &f = rep.fixtures[i];
        for (const auto &m : f.timeouts)
            add_flag(rep.flags, "timeout:" + m);
        if (!f.orientation_bound)
            continue;
        if (!rep.best_index ||
            *f.orientation_bound < *rep.fixtures[*rep.best_index].orientation_bound)
            rep.best_index = i;
    }

    if (opts.methods.formulas) {
        rep.bezout = bezout_bound(g.n_vertices(), opts.d);
        rep.borcea_streinu = borcea_streinu_bound(g.n_vertices(), opts.d);
        rep.closed_form = new_closed_bound(g.n_vertices(), opts.d, !cliques.empty(), ab);
        rep.bm_basis_value = bm_basis(opts.d);
        rep.power_basis = ab.base;
    }
    return rep;
}

json trace_to_json(const EliminationTrace &t) {
    json steps = json::array();
    mpz_class running = 1;
    for (const auto &s : t.steps) {
        running *= s.cost;
        json js{{"kind", s.kind == EliminationStep::Kind::vertex ? "vertex" : "path"},
                {"vertices", s.vertices},
                {"cost", std::to_string(s.cost)},
                {"equilibrium", s.equilibrium},
                {"running_product", mpz_str(running)}};
        if (s.kind == EliminationStep::Kind::vertex) {
            js["p"] = s.p;
            js["h"] = s.h;
        }
        steps.push_back(std::move(js));
    }
    json terminals = json::array();
    for (const auto &term : t.terminals) {
        const char *kind = nullptr;
        switch (term.kind) {
        case TerminalInfo::Kind::empty: kind = "empty"; break;
        case TerminalInfo::Kind::single_vertex: kind = "single_vertex"; break;
        case TerminalInfo::Kind::tree: kind = "tree"; break;
        case TerminalInfo::Kind::dead: kind = "dead"; break;
        }
        terminals.push_back(json{{"kind", kind},
                                 {"vertices", term.vertices},
                                 {"orientations", term.orientations}});
    }
    return json{{"steps", std::move(steps)},
                {"product_bound", mpz_str(t.product_bound)},
                {"terminals", std::move(terminals)},
                {"zero_count", t.zero_count}};
}

EliminationTrace trace_from_json(const json &j) {
    EliminationTrace t;
    for (const auto &js : j.at("steps")) {
        EliminationStep s;
        s.kind = js.at("kind") == "vertex" ? EliminationStep::Kind::vertex
                                           : EliminationStep::Kind::path;
        s.vertices = js.at("vertices").get<std::vector<int>>();
        s.cost = std::stoll(js.at("cost").get<std::string>());
        s.equilibrium = js.at("equilibrium").get<int>();
        if (js.contains("p")) {
            s.p = js.at("p").get<int>();
            s.h = js.at("h").get<int>();
        }
        t.steps.push_back(std::move(s));
    }
    t.product_bound = mpz_class(j.at("product_bound").get<std::string>());
    for (const auto &jt : j.at("terminals")) {
        TerminalInfo term;
        const std::string kind = jt.at("kind");
        term.kind = kind == "empty"           ? TerminalInfo::Kind::empty
                    : kind == "single_vertex" ? TerminalInfo::Kind::single_vertex
                    : kind == "tree"          ? TerminalInfo::Kind::tree
                                              : TerminalInfo::Kind::dead;
        term.vertices = jt.at("vertices").get<std::vector<int>>();
        term.orientations = jt.at("orientations").get<int>();
        t.terminals.push_back(std::move(term));
    }
    t.zero_count = j.at("zero_count").get<bool>();
    return t;
}

json report_to_json(const BoundReport &r) {
    json graph{{"vertices", r.graph.vertices()}};
    json edges = json::array();
    for (const auto &[u, v] : r.graph.edges())
        edges.push_back(json::array({u, v}));
    graph["edges"] = std::move(edges);

    json rig{{"count_ok", r.rigidity.count_ok},
             {"sparsity_ok", r.rigidity.sparsity_ok},
             {"global_ok", r.rigidity.global_ok},
             {"necessary_only", r.rigidity.necessary_only},
             {"exhaustive", r.rigidity.subgraph_check_exhaustive},
             {"message", r.rigidity.message}};
    if (r.rigidity.violating_subgraph)
        rig["violating_subgraph"] = *r.rigidity.violating_subgraph;

    json cliques = json::array();
    for (const auto &f : r.fixtures) {
        json jf{{"fixture", f.fixture}};
        if (f.partially_fixed)
            jf["partially_fixed"] = *f.partially_fixed;
        if (f.exact_count)
            jf["exact_count"] = mpz_str(*f.exact_count);
        if (f.permanent)
            jf["permanent"] = mpz_str(*f.permanent);
        if (f.permanent_b)
            jf["permanent_b"] = mpq_str(*f.permanent_b);
        if (f.orientation_bound)
            jf["orientation_bound"] = mpz_str(*f.orientation_bound);
        if (f.trace)
            jf["elimination"] = trace_to_json(*f.trace);
        if (f.corollary)
            jf["corollary_bound"] = round12(*f.corollary);
        if (f.bm_eq2)
            jf["bregman_minc_eq2"] = round12(*f.bm_eq2);
        json comps = json::array();
        for (const auto &[n, k] : f.components)
            comps.push_back(json::array({n, k}));
        jf["components"] = std::move(comps);
        jf["timeouts"] = f.timeouts;
        jf["notes"] = f.notes;
        cliques.push_back(std::move(jf));
    }

    json bounds = json::object();
    if (r.best_index)
        bounds["best_index"] = *r.best_index;
    if (r.bezout)
        bounds["bezout"] = round12(*r.bezout);
    if (r.borcea_streinu)
        bounds["borcea_streinu"] = mpq_str(*r.borcea_streinu);
    if (r.closed_form) {
        json cf{{"printed", round12(r.closed_form->printed)},
                {"literal", round12(r.closed_form->literal)}};
        if (r.closed_form->printed_exact)
            cf["exact"] = mpq_str(*r.closed_form->printed_exact);
        bounds["closed_form"] = std::move(cf);
    }
    if (r.bm_basis_value != 0.0)
        bounds["bm_basis"] = round12(r.bm_basis_value);
    if (r.power_basis != 0.0)
        bounds["power_basis"] = round12(r.power_basis);

    return json{{"graph", std::move(graph)},
                {"d", r.d},
                {"rigidity", std::move(rig)},
                {"cliques", std::move(cliques)},
                {"bounds", std::move(bounds)},
                {"flags", r.flags}};
}

BoundReport report_from_json(const json &j) {
    BoundReport r;
    std::vector<int> vertices = j.at("graph").at("vertices").get<std::vector<int>>();
    std::vector<Edge> edges;
    for (const auto &e : j.at("graph").at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    r.graph = Graph(std::move(vertices), std::move(edges));
    r.d = j.at("d").get<int>();

    const json &rig = j.at("rigidity");
    r.rigidity.d = r.d;
    r.rigidity.count_ok = rig.at("count_ok").get<bool>();
    r.rigidity.sparsity_ok = rig.at("sparsity_ok").get<bool>();
    r.rigidity.global_ok = rig.at("global_ok").get<bool>();
    r.rigidity.necessary_only = rig.at("necessary_only").get<bool>();
    r.rigidity.subgraph_check_exhaustive = rig.at("exhaustive").get<bool>();
    r.rigidity.message = rig.at("message").get<std::string>();
    if (rig.contains("violating_subgraph"))
        r.rigidity.violating_subgraph = rig.at("violating_subgraph").get<std::vector<int>>();

    for (const auto &jf : j.at("cliques")) {
        FixtureResult f;
        f.fixture = jf.at("fixture").get<std::vector<int>>();
        if (jf.contains("partially_fixed"))
            f.partially_fixed = jf.at("partially_fixed").get<int>();
        if (jf.contains("exact_count"))
            f.exact_count = mpz_class(jf.at("exact_count").get<std::string>());
        if (jf.contains("permanent"))
            f.permanent = mpz_class(jf.at("permanent").get<std::string>());
        if (jf.contains("permanent_b"))
            f.permanent_b = mpq_parse(jf.at("permanent_b").get<std::string>());
        if (jf.contains("orientation_bound"))
            f.orientation_bound = mpz_class(jf.at("orientation_bound").get<std::string>());
        if (jf.contains("elimination"))
            f.trace = trace_from_json(jf.at("elimination"));
        if (jf.contains("corollary_bound"))
            f.corollary = jf.at("corollary_bound").get<double>();
        if (jf.contains("bregman_minc_eq2"))
            f.bm_eq2 = jf.at("bregman_minc_eq2").get<double>();
        for (const auto &c : jf.at("components"))
            f.components.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
        f.timeouts = jf.at("timeouts").get<std::vector<std::string>>();
        f.notes = jf.at("notes").get<std::vector<std::string>>();
        r.fixtures.push_back(std::move(f));
    }

    const json &bounds = j.at("bounds");
    if (bounds.contains("best_index"))
        r.best_index = bounds.at("best_index").get<std::size_t>();
    if (bounds.contains("bezout"))
        r.bezout = bounds.at("bezout").get<double>();
    if (bounds.contains("borcea_streinu"))
        r.borcea_streinu = mpq_parse(bounds.at("borcea_streinu").get<std::string>());
    if (bounds.contains("closed_form")) {
        NewClosedBound cf;
        cf.printed = bounds.at("closed_form").at("printed").get<double>();
        cf.literal = bounds.at("closed_form").at("literal").get<double>();
        if (bounds.at("closed_form").contains("exact"))
            cf.printed_exact = mpq_parse(bounds.at("closed_form").at("exact").get<std::string>());
        r.closed_form = cf;
    }
    if (bounds.contains("bm_basis"))
        r.bm_basis_value = bounds.at("bm_basis").get<double>();
    if (bounds.contains("power_basis"))
        r.power_basis = bounds.at("power_basis").get<double>();
    r.flags = j.at("flags").get<std::vector<std::string>>();
    return r;
}

std::string report_to_text(const BoundReport &r) {
    std::ostringstream out;
    out << "graph: " << r.graph.n_vertices() << " vertices, " << r.graph.n_edges()
        << " edges; d=" << r.d << "\n";
    if (r.d == 2)
        out << "laman: " << (r.rigidity.global_ok ? "yes" : "no") << "\n";
    else
        out << "maxwell(necessary): " << (r.rigidity.global_ok ? "pass" : "fail") << "\n";
    out << "fixtures tried: " << r.fixtures.size() << "\n";

    if (r.best_index) {
        const auto &f = r.fixtures[*r.best_index];
        out << "best fixture: (";
        for (std::size_t i = 0; i < f.fixture.size(); ++i)
            out << (i ? "," : "") << f.fixture[i];
        out << ")";
        if (f.partially_fixed)
            out << " partially fixed " << *f.partially_fixed;
        out << "\n";
        if (f.exact_count)
            out << "  exact orientation count B: " << f.exact_count->get_str() << "\n";
        if (f.permanent)
            out << "  permanent per(A): " << f.permanent->get_str() << "\n";
        if (f.orientation_bound)
            out << "  embedding bound 2^(|V|-d)*B: " << f.orientation_bound->get_str()
                << "\n";
        if (f.trace)
            out << "  elimination product bound: " << f.trace->product_bound.get_str()
                << (f.trace->zero_count ? " (zero-count flagged)" : "") << "\n";
        if (f.corollary)
            out << "  component formula bound: " << format_sig5(*f.corollary) << "\n";
        if (f.bm_eq2)
            out << "  bregman-minc (pseudograph): " << format_sig5(*f.bm_eq2) << "\n";
    }
    if (r.fixtures.size() > 1) {
        out << "per fixture (fixture: B, embedding bound):\n";
        for (const auto &f : r.fixtures) {
            out << "  (";
            for (std::size_t i = 0; i < f.fixture.size(); ++i)
                out << (i ? "," : "") << f.fixture[i];
            out << ")";
            if (f.partially_fixed)
                out << "+pf" << *f.partially_fixed;
            out << ": " << (f.exact_count ? f.exact_count->get_str() : "-") << ", "
                << (f.orientation_bound ? f.orientation_bound->get_str() : "-") << "\n";
        }
    }
    if (r.closed_form)
        out << "closed form: " << format_sig5(r.closed_form->printed) << " (printed) / "
            << format_sig5(r.closed_form->literal) << " (literal)\n";
    if (r.borcea_streinu)
        out << "borcea-streinu: " << mpq_str(*r.borcea_streinu) << "\n";
    if (r.bezout)
        out << "bezout: " << format_sig5(*r.bezout) << "\n";
    if (!r.flags.empty()) {
        out << "flags:";
        for (const auto &f : r.flags)
            out << " " << f;
        out << "\n";
    }
    return out.str();
}

} // namespace rigi
