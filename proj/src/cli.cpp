#include "schurlab/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "schurlab/bounds.hpp"
#include "schurlab/colouring_hypergraph.hpp"
#include "schurlab/constructions.hpp"
#include "schurlab/io.hpp"
#include "schurlab/montecarlo.hpp"
#include "schurlab/solver.hpp"
#include "schurlab/verify.hpp"
#include "schurlab/wickets.hpp"

namespace schurlab {

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
    ModelConstants constants;
    bool json = false;
    unsigned workers = 1;
};

/// Writes the result, then the resolved configuration that produced it.
void emit(Context& ctx, const std::string& command, const Json& config, const Json& result,
          const std::vector<std::string>& lines) {
    Json record;
    record["command"] = command;
    record["config"] = config;
    record["constants"] = to_json(ctx.constants);
    if (ctx.json) {
        record["result"] = result;
        ctx.out << dump_json(record);
        return;
    }
    for (const auto& l : lines) ctx.out << l << '\n';
    ctx.out << "# config " << record.dump() << '\n';
}

IntSet same_ground(const IntSet& s, Element n) { return s.ground() == n ? s : s.regrounded(n); }

Json hosting_set_json(const HostingSet& h) {
    Json a = Json::array();
    for (Element x : h.view()) a.push_back(x);
    return a;
}

std::string hosting_set_text(const HostingSet& h) {
    std::string s = "{";
    for (Element x : h.view()) {
        if (s.size() > 1) s += ',';
        s += std::to_string(x);
    }
    return s + "}";
}

void add_colouring_lines(std::vector<std::string>& lines, const Colouring& c) {
    lines.push_back("red: " + format_compact(c.red));
    lines.push_back("blue: " + format_compact(c.blue));
}

SchurVerdict verdict_of(SolveStatus s) {
    return s == SolveStatus::Colourable      ? SchurVerdict::NotSchur
           : s == SolveStatus::NotColourable ? SchurVerdict::Schur
                                             : SchurVerdict::Unknown;
}

int cmd_check_schur(Context& ctx, const std::string& text, Element n, std::uint64_t budget) {
    const IntSet s = parse_set_literal(text, n);
    const SolveOutcome o = find_schur_colouring(s, {}, budget);
    const SchurVerdict v = verdict_of(o.status);
    Json config{{"set", format_compact(s)}, {"n", s.ground()}, {"budget", budget}};
    Json result{{"verdict", verdict_name(v)}, {"nodes_explored", o.nodes_explored}};
    result["witness"] = o.witness ? colouring_to_json(*o.witness) : Json(nullptr);
    std::vector<std::string> lines{verdict_name(v)};
    if (o.witness) add_colouring_lines(lines, *o.witness);
    emit(ctx, "check-schur", config, result, lines);
    return v == SchurVerdict::Unknown ? kExitBudget : kExitOk;
}

int cmd_colour(Context& ctx, const std::string& text, const std::string& force_blue, const std::string& container_path,
               Element n, std::uint64_t budget) {
    IntSet s = parse_set_literal(text, n);
    std::optional<IntSet> blue;
    if (!force_blue.empty()) blue = parse_set_literal(force_blue, n);
    std::optional<ContainerLike> container;
    if (!container_path.empty()) {
        container = container_from_json(parse_json_text(read_text_file(container_path), container_path));
    }
    Element ground = s.ground();
    if (blue) ground = std::max(ground, blue->ground());
    if (container) ground = std::max(ground, container->n);
    s = same_ground(s, ground);
    ColourConstraint constraint;
    if (blue) {
        s = s | same_ground(*blue, ground);
        constraint.force(same_ground(*blue, ground), Colour::Blue);
    }
    if (container) {
        const IntSet red_ok = same_ground(container->red, ground), blue_ok = same_ground(container->blue, ground);
        s.for_each([&](Element x) {
            constraint.restrict(x, static_cast<std::uint8_t>((red_ok.contains(x) ? kAllowRed : 0) |
                                                             (blue_ok.contains(x) ? kAllowBlue : 0)));
        });
    }
    const SolveOutcome o = find_schur_colouring(s, constraint, budget);

    Json config{{"set", format_compact(s)}, {"n", ground}, {"budget", budget}};
    config["force_blue"] = blue ? Json(format_compact(*blue)) : Json(nullptr);
    config["container"] = container_path.empty() ? Json(nullptr) : Json(container_path);
    Json result{{"status", status_name(o.status)}, {"nodes_explored", o.nodes_explored}};
    result["colouring"] = o.witness ? colouring_to_json(*o.witness) : Json(nullptr);
    std::vector<std::string> lines{status_name(o.status)};
    if (o.witness) add_colouring_lines(lines, *o.witness);
    if (container) {
        const ContainerLike c(same_ground(container->red, ground), same_ground(container->blue, ground));
        const ContainerCase cc = container_case(c, ctx.constants.container_epsilon);
        result["container_case"] = container_case_name(cc);
        lines.push_back(std::string("container case: ") + container_case_name(cc));
    }
    emit(ctx, "colour", config, result, lines);
    return o.status == SolveStatus::BudgetExceeded ? kExitBudget : kExitOk;
}

int cmd_construct(Context& ctx, const std::string& name, Element n, bool validate, std::uint64_t budget) {
    const NamedConstruction c = resolve_construction(name, n);
    Json config{{"name", name}, {"n", n}, {"validate", validate}, {"budget", budget}};
    Json result{{"set", format_compact(c.set)}, {"ground", c.set.ground()}, {"size", c.set.size()}};
    result["colouring"] = c.colouring ? colouring_to_json(*c.colouring) : Json(nullptr);
    std::vector<std::string> lines{"set: " + format_compact(c.set), "size: " + std::to_string(c.set.size())};
    if (c.colouring) add_colouring_lines(lines, *c.colouring);
    int code = kExitOk;
    if (validate) {
        const std::string head = name.substr(0, name.find(':'));
        if (c.colouring) {
            const auto bad = validate_colouring(c.set, *c.colouring);
            Json mono = Json::array();
            for (const auto& h : bad) mono.push_back(hosting_set_json(h));
            result["monochromatic"] = mono;
            if (bad.empty()) {
                lines.push_back("valid");
            } else {
                std::string l = "invalid:";
                for (const auto& h : bad) l += ' ' + hosting_set_text(h);
                lines.push_back(l);
                code = kExitViolation;
            }
        } else if (head == "L1" || head == "L2") {
            const SchurVerdict v = is_schur(c.set, budget);
            result["verdict"] = verdict_name(v);
            lines.push_back(verdict_name(v));
            if (v == SchurVerdict::NotSchur) code = kExitViolation;
            if (v == SchurVerdict::Unknown) code = kExitBudget;
        } else {
            const bool sf = is_sum_free(c.set);
            result["sum_free"] = sf;
            lines.push_back(sf ? "sum-free" : "not sum-free");
            if (!sf) code = kExitViolation;
        }
    }
    emit(ctx, "construct", config, result, lines);
    return code;
}

int cmd_obstruction(Context& ctx, const std::string& base_text, const std::string& perturb_text, Element n,
                    std::uint64_t budget) {
    IntSet base = parse_set_literal(base_text, n);
    IntSet perturb = parse_set_literal(perturb_text, n);
    const Element ground = std::max(base.ground(), perturb.ground());
    base = same_ground(base, ground);
    perturb = same_ground(perturb, ground);
    const IntSet instance = base | perturb;
    const ObstructionOutcome o = minimal_obstruction(instance, ColourConstraint::blue_only(base), budget);

    Json config{{"base", format_compact(base)}, {"perturbation", format_compact(perturb)}, {"n", ground},
                {"budget", budget}};
    Json result{{"status", status_name(o.status)}, {"nodes_explored", o.nodes_explored}};
    std::vector<std::string> lines{status_name(o.status)};
    int code = kExitOk;
    if (o.status == SolveStatus::Colourable) {
        const SolveOutcome w = find_schur_colouring(instance, ColourConstraint::blue_only(base), budget);
        if (w.witness) {
            result["colouring"] = colouring_to_json(*w.witness);
            add_colouring_lines(lines, *w.witness);
        }
    } else if (o.obstruction) {
        const HostingHypergraph& h = *o.obstruction;
        Json edges = Json::array();
        lines.push_back("edges: " + std::to_string(h.edges.size()));
        for (const auto& e : h.edges) {
            std::size_t in_base = 0;
            for (Element x : e.view()) in_base += base.contains(x) ? 1 : 0;
            const EdgeType t = e.count != 3 || in_base > 1 ? EdgeType::Other : in_base == 0 ? EdgeType::T1 : EdgeType::T2;
            edges.push_back(Json{{"edge", hosting_set_json(e)}, {"type", edge_type_name(t)}});
            lines.push_back("  " + hosting_set_text(e) + " " + edge_type_name(t));
        }
        result["edges"] = edges;
        result["vertices"] = format_compact(h.vertices);
        const HminReport r = check_hmin_properties(h, base);
        result["uniform3"] = r.uniform3;
        result["one_base_per_edge"] = r.one_base_per_edge;
        result["linear"] = r.linear;
        lines.push_back(std::string("uniform3: ") + (r.uniform3 ? "yes" : "no"));
        lines.push_back(std::string("one base element per edge: ") + (r.one_base_per_edge ? "yes" : "no"));
        lines.push_back(std::string("linear: ") + (r.linear ? "yes" : "no"));
        Json cycle = nullptr;
        if (r.uniform3) {
            if (auto c = find_loose_cycle(h, base)) {
                Json ce = Json::array();
                std::string l = "loose cycle:";
                for (const auto& e : c->edges) {
                    ce.push_back(hosting_set_json(e));
                    l += ' ' + hosting_set_text(e);
                }
                Json types = Json::array();
                for (EdgeType t : c->types) types.push_back(edge_type_name(t));
                cycle = Json{{"edges", ce}, {"types", types}, {"consecutive_t2_pairs", c->consecutive_t2_pairs}};
                lines.push_back(l);
            }
        }
        if (cycle.is_null()) lines.push_back("loose cycle: none");
        result["loose_cycle"] = cycle;
    } else {
        code = kExitBudget;
    }
    emit(ctx, "obstruction", config, result, lines);
    return code;
}

int cmd_wickets(Context& ctx, const std::string& text, const std::string& chi_text, Element n,
                const std::string& method_name) {
    IntSet s = parse_set_literal(text, n);
    std::optional<IntSet> chi;
    if (!chi_text.empty()) {
        chi = parse_set_literal(chi_text, n);
        const Element ground = std::max(s.ground(), chi->ground());
        s = same_ground(s, ground);
        chi = same_ground(*chi, ground);
    }
    const WicketMethod method = method_name == "explicit" ? WicketMethod::Explicit
                                : method_name == "ie"     ? WicketMethod::InclusionExclusion
                                                          : WicketMethod::Auto;
    const std::uint64_t count = count_wickets(s, chi, method, ctx.workers);
    const auto first = first_wicket(s, chi);
    Json config{{"set", format_compact(s)}, {"n", s.ground()}, {"method", method_name}};
    config["chi"] = chi ? Json(format_compact(*chi)) : Json(nullptr);
    Json result{{"count", count}};
    result["first"] = first ? Json(*first) : Json(nullptr);
    std::vector<std::string> lines{"wickets: " + std::to_string(count)};
    if (first) lines.push_back("first: " + Json(*first).dump());
    emit(ctx, "wickets", config, result, lines);
    return kExitOk;
}

int cmd_ha_stats(Context& ctx, const std::string& text, Element n, std::optional<double> tau) {
    const IntSet a = parse_set_literal(text, n);
    const ColouringHypergraph h = build_HA(a, n);
    const HAStats st = ha_stats(h);
    Json config{{"base", format_compact(a)}, {"n", n}};
    config["tau"] = tau ? Json(round_sig12(*tau)) : Json(nullptr);
    Json result{{"edge_count", st.edge_count},         {"vertex_count", st.vertex_count},
                {"average_degree", round_sig12(st.average_degree)},
                {"max_pair_degree", st.max_pair_degree}, {"max_triple_degree", st.max_triple_degree},
                {"max_quad_degree", st.max_quad_degree}, {"sum_d2", st.sum_d2},
                {"sum_d3", st.sum_d3},                   {"sum_d4", st.sum_d4}};
    std::vector<std::string> lines{
        "edges: " + std::to_string(st.edge_count),
        "vertices: " + std::to_string(st.vertex_count),
        "average degree: " + format_number(st.average_degree),
        "max degrees (pair, triple, quad): " + std::to_string(st.max_pair_degree) + " " +
            std::to_string(st.max_triple_degree) + " " + std::to_string(st.max_quad_degree),
    };
    const auto s = static_cast<Element>(a.size());
    if (s > 0) {
        const double log_count = container_log_count_bound(n, s, ctx.constants.container_c);
        result["container_log_count_bound"] = round_sig12(log_count);
        lines.push_back("container log-count bound: " + format_number(log_count));
    }
    if (tau) {
        const double by_max = codegree_delta(st, n, *tau, CodegreeVariant::MaxDegree);
        const double exact = codegree_delta(st, n, *tau, CodegreeVariant::ExactSums);
        result["codegree_max_degree"] = round_sig12(by_max);
        result["codegree_exact_sums"] = round_sig12(exact);
        lines.push_back("codegree (max degree): " + format_number(by_max));
        lines.push_back("codegree (exact sums): " + format_number(exact));
        if (s > 0) {
            const double est = codegree_upper_estimate(n, s, *tau);
            result["codegree_upper_estimate"] = round_sig12(est);
            lines.push_back("codegree upper estimate: " + format_number(est));
        }
    }
    emit(ctx, "ha-stats", config, result, lines);
    return kExitOk;
}

int cmd_sweep(Context& ctx, const std::string& config_path, std::uint64_t seed, const std::string& out_json,
              const std::string& out_csv, const std::string& out_plot) {
    const SweepConfig config = parse_sweep_config(parse_json_text(read_text_file(config_path), config_path), seed);
    const SweepRecord record = run_sweep(config, ctx.constants, ctx.workers);
    const std::string text = dump_json(to_json(record));
    if (out_json.empty()) {
        ctx.out << text;
    } else {
        write_text_file(out_json, text);
    }
    if (!out_csv.empty()) write_text_file(out_csv, sweep_csv(record.curve));
    if (!out_plot.empty()) write_text_file(out_plot, plot_data(record.curve));
    if (record.curve.non_conclusive()) ctx.err << "warning: more than 10% unknown outcomes at some grid point\n";
    return kExitOk;
}

int cmd_verify(Context& ctx, const std::string& suite, std::optional<Element> n_min, std::optional<Element> n_max,
               std::uint64_t seed, std::optional<std::uint64_t> count) {
    VerifyReport r;
    Json config{{"suite", suite}, {"seed", seed}};
    if (suite == "hu") {
        const Element lo = n_min.value_or(10), hi = n_max.value_or(16);
        config["n_min"] = lo;
        config["n_max"] = hi;
        r = verify_large_subsets(lo, hi);
    } else if (suite == "prop31") {
        const Element hi = n_max.value_or(30);
        const std::uint64_t k = count.value_or(200);
        config["exhaustive_max"] = hi;
        config["random_count"] = k;
        config["random_max"] = 200;
        r = verify_eleven_value_sets(hi, k, 200, seed);
    } else if (suite == "stability") {
        const Element lo = n_min.value_or(10), hi = n_max.value_or(22);
        config["n_min"] = lo;
        config["n_max"] = hi;
        r = verify_stability(lo, hi);
    } else if (suite == "claim48") {
        const Element hi = n_max.value_or(200);
        config["n_max"] = hi;
        r = verify_pair_partition(hi);
    } else if (suite == "wickets") {
        const Element hi = n_max.value_or(40);
        const std::uint64_t k = count.value_or(100);
        config["n_max"] = hi;
        config["bound_n"] = 60;
        config["per_size"] = k;
        r = verify_wickets(hi, 60, k, seed);
    } else if (suite == "moments") {
        const Element hi = n_max.value_or(60);
        const std::uint64_t k = count.value_or(100);
        config["n_max"] = hi;
        config["count"] = k;
        r = verify_moments(hi, k, seed);
    } else {
        throw ConfigError("unknown suite \"" + suite + "\"");
    }
    Json result{{"cases", r.cases}, {"violations", r.violations}, {"budget_exceeded", r.budget_exceeded},
                {"examples", r.examples}};
    std::vector<std::string> lines{"suite " + suite + ": " + std::to_string(r.cases) + " cases, " +
                                   std::to_string(r.violations) + " violations, " +
                                   std::to_string(r.budget_exceeded) + " undecided"};
    for (const auto& e : r.examples) lines.push_back("  " + e);
    lines.push_back(r.ok() ? "PASS" : "FAIL");
    emit(ctx, "verify", config, result, lines);
    if (r.violations > 0) return kExitViolation;
    return r.budget_exceeded > 0 ? kExitBudget : kExitOk;
}

int cmd_thresholds(Context& ctx, Element n, std::optional<Element> t, std::optional<Element> s) {
    const TheoreticalThresholds th = theoretical_thresholds(n, t, s);
    Json config{{"n", n}};
    config["t"] = t ? Json(*t) : Json(nullptr);
    config["s"] = s ? Json(*s) : Json(nullptr);
    auto opt = [](const std::optional<double>& v) { return v ? Json(round_sig12(*v)) : Json(nullptr); };
    Json result{{"random_set", round_sig12(th.random_set)}, {"positive_density", round_sig12(th.positive_density)}};
    result["dense"] = opt(th.dense);
    result["sparse_lower"] = opt(th.sparse_lower);
    result["sparse_upper"] = opt(th.sparse_upper);
    std::vector<std::string> lines{"random set: " + format_number(th.random_set),
                                   "positive density: " + format_number(th.positive_density)};
    if (th.dense) lines.push_back("dense: " + format_number(*th.dense));
    if (th.sparse_lower) lines.push_back("sparse lower: " + format_number(*th.sparse_lower));
    if (th.sparse_upper) lines.push_back("sparse upper: " + format_number(*th.sparse_upper));
    emit(ctx, "thresholds", config, result, lines);
    return kExitOk;
}

int cmd_classify(Context& ctx, const std::string& text, Element n) {
    const IntSet a = parse_set_literal(text, n);
    const DenseCaseReport r = classify_dense_case(a, ctx.constants.classifier_delta, ctx.constants.classifier_epsilon);
    Json config{{"set", format_compact(a)}, {"n", a.ground()}};
    Json result{{"label", dense_case_name(r.label)}, {"triple_sets", r.triple_sets},
                {"even_count", r.even_count},        {"missing_odds", r.missing_odds},
                {"missing_top", r.missing_top},      {"t", r.t}};
    emit(ctx, "classify", config, result, {dense_case_name(r.label)});
    return kExitOk;
}

int cmd_plot_data(Context& ctx, const std::string& path, const std::string& out_path) {
    const SweepRecord r = sweep_record_from_json(parse_json_text(read_text_file(path), path));
    const std::string text = plot_data(r.curve);
    if (out_path.empty()) {
        ctx.out << text;
    } else {
        write_text_file(out_path, text);
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schur property toolkit: colourings, constructions, counts and threshold sweeps", "schurlab"};
    app.require_subcommand(1);

    Context ctx{out, err, {}, false, default_workers()};
    std::optional<double> zeta, xi;
    app.add_flag("--json", ctx.json, "Emit a JSON record instead of text");
    app.add_option("--workers", ctx.workers, "Worker threads (default from SCHURLAB_WORKERS)")
        ->check(CLI::PositiveNumber);
    app.add_option("--delta", ctx.constants.classifier_delta, "Classifier delta")->check(CLI::Range(0.0, 1.0));
    app.add_option("--epsilon", ctx.constants.classifier_epsilon, "Classifier epsilon")->check(CLI::Range(0.0, 1.0));
    app.add_option("--container-epsilon", ctx.constants.container_epsilon, "Container case epsilon")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--zeta", zeta, "Tail-bound constant zeta");
    app.add_option("--xi", xi, "Supersaturation constant xi");
    app.add_option("--container-c", ctx.constants.container_c, "Container count constant c")
        ->check(CLI::PositiveNumber);
    app.add_option("--wicket-C", ctx.constants.wicket_C, "Probability scale constant C")->check(CLI::PositiveNumber);

    std::function<int()> run;
    std::string text, text2, force_blue, container, chi, method = "auto", suite, out_json, out_csv, out_plot, out_path;
    Element n = 0;
    std::uint64_t budget = kDefaultBudget, seed = 0, verify_seed = 1;
    bool validate = false;
    std::optional<double> tau;
    std::optional<Element> t, s, n_min, n_max;
    std::optional<std::uint64_t> count;

    auto* check = app.add_subcommand("check-schur", "Decide whether a set is Schur");
    check->add_option("set", text, "Set literal")->required();
    check->add_option("--n", n, "Ground size");
    check->add_option("--budget", budget, "Search node budget");
    check->callback([&] { run = [&] { return cmd_check_schur(ctx, text, n, budget); }; });

    auto* colour = app.add_subcommand("colour", "Find a Schur colouring under constraints");
    colour->add_option("set", text, "Set literal")->required();
    colour->add_option("--force-blue", force_blue, "Elements that must be blue");
    colour->add_option("--container", container, "JSON file with allowed red and blue sets");
    colour->add_option("--n", n, "Ground size");
    colour->add_option("--budget", budget, "Search node budget");
    colour->callback([&] { run = [&] { return cmd_colour(ctx, text, force_blue, container, n, budget); }; });

    auto* construct = app.add_subcommand("construct", "Build a named construction");
    construct->add_option("name", text, "odd, top, mod5, dense0:n,t, sparse:n,s, L1:a,x,d, L2:a,x,d")->required();
    construct->add_option("--n", n, "Ground size");
    construct->add_flag("--validate", validate, "Check the construction's defining property");
    construct->add_option("--budget", budget, "Search node budget");
    construct->callback([&] { run = [&] { return cmd_construct(ctx, text, n, validate, budget); }; });

    auto* obstruction = app.add_subcommand("obstruction", "Minimal obstruction with the base forced blue");
    obstruction->add_option("base", text, "Base set literal")->required();
    obstruction->add_option("perturb", text2, "Perturbation set literal")->required();
    obstruction->add_option("--n", n, "Ground size");
    obstruction->add_option("--budget", budget, "Search node budget");
    obstruction->callback([&] { run = [&] { return cmd_obstruction(ctx, text, text2, n, budget); }; });

    auto* wickets = app.add_subcommand("wickets", "Count ordered wickets");
    wickets->add_option("set", text, "Set literal")->required();
    wickets->add_option("--chi", chi, "Set containing every y_i and z_i");
    wickets->add_option("--n", n, "Ground size");
    wickets->add_option("--method", method, "auto, explicit or ie")
        ->check(CLI::IsMember({"auto", "explicit", "ie"}));
    wickets->callback([&] { run = [&] { return cmd_wickets(ctx, text, chi, n, method); }; });

    auto* ha = app.add_subcommand("ha-stats", "Colouring hypergraph statistics");
    ha->add_option("base", text, "Base set literal")->required();
    ha->add_option("--n", n, "Ground size")->required()->check(CLI::PositiveNumber);
    ha->add_option("--tau", tau, "Codegree parameter tau");
    ha->callback([&] { run = [&] { return cmd_ha_stats(ctx, text, n, tau); }; });

    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo sweep over a probability grid");
    sweep_cmd->add_option("--config", text, "JSON sweep config")->required();
    sweep_cmd->add_option("--seed", seed, "Master seed")->required();
    sweep_cmd->add_option("--out-json", out_json, "Write the JSON record here instead of stdout");
    sweep_cmd->add_option("--out-csv", out_csv, "Write CSV results here");
    sweep_cmd->add_option("--out-plot", out_plot, "Write plot data here");
    sweep_cmd->callback([&] { run = [&] { return cmd_sweep(ctx, text, seed, out_json, out_csv, out_plot); }; });

    auto* verify = app.add_subcommand("verify", "Run a desk-scale verification suite");
    verify->add_option("--suite", suite, "hu, prop31, stability, claim48, wickets or moments")
        ->required()
        ->check(CLI::IsMember({"hu", "prop31", "stability", "claim48", "wickets", "moments"}));
    verify->add_option("--n-min", n_min, "Smallest n");
    verify->add_option("--n-max", n_max, "Largest n");
    verify->add_option("--seed", verify_seed, "Seed for randomised cases");
    verify->add_option("--count", count, "Randomised case count");
    verify->callback([&] { run = [&] { return cmd_verify(ctx, suite, n_min, n_max, verify_seed, count); }; });

    auto* thresholds = app.add_subcommand("thresholds", "Evaluate the threshold formulas");
    thresholds->add_option("--n", n, "Ground size")->required()->check(CLI::PositiveNumber);
    thresholds->add_option("--t", t, "Excess over n/2 of the dense base")->check(CLI::PositiveNumber);
    thresholds->add_option("--s", s, "Size of the sparse base")->check(CLI::PositiveNumber);
    thresholds->callback([&] { run = [&] { return cmd_thresholds(ctx, n, t, s); }; });

    auto* classify = app.add_subcommand("classify", "Dense-case classification of a set");
    classify->add_option("set", text, "Set literal")->required();
    classify->add_option("--n", n, "Ground size");
    classify->callback([&] { run = [&] { return cmd_classify(ctx, text, n); }; });

    auto* plot = app.add_subcommand("plot-data", "Plot data from a sweep record");
    plot->add_option("results", text, "Sweep record JSON")->required();
    plot->add_option("--out", out_path, "Write here instead of stdout");
    plot->callback([&] { run = [&] { return cmd_plot_data(ctx, text, out_path); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        err << app.help();
        return kExitUsage;
    }
    ctx.constants.zeta = zeta;
    ctx.constants.xi = xi;
    if (!run) {
        err << app.help();
        return kExitUsage;
    }
    try {
        return run();
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NoCrossing& e) {
        err << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace schurlab
