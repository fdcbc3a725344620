#include "schurlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "schurlab/constructions.hpp"

namespace schurlab {

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) throw ConfigError(std::string(what) + " must be a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed) known = known || item.key() == k;
        if (!known) throw ConfigError(std::string(what) + ": unknown key \"" + item.key() + "\"");
    }
}

const Json& require(const Json& j, const char* key, const char* what) {
    if (!j.contains(key)) throw ConfigError(std::string(what) + ": missing key \"" + key + "\"");
    return j.at(key);
}

std::uint64_t get_uint(const Json& j, const char* key, const char* what) {
    const Json& v = require(j, key, what);
    if (!v.is_number_unsigned()) {
        throw ConfigError(std::string(what) + ": \"" + key + "\" must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

double get_double(const Json& j, const char* key, const char* what) {
    const Json& v = require(j, key, what);
    if (!v.is_number()) throw ConfigError(std::string(what) + ": \"" + key + "\" must be a number");
    return v.get<double>();
}

std::optional<double> get_optional_double(const Json& j, const char* key, const char* what) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return get_double(j, key, what);
}

std::string get_string(const Json& j, const char* key, const char* what) {
    const Json& v = require(j, key, what);
    if (!v.is_string()) throw ConfigError(std::string(what) + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

Json number(double x) { return round_sig12(x); }

Json optional_number(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

}  // namespace

Json to_json(const ModelConstants& c) {
    Json j;
    j["classifier_delta"] = number(c.classifier_delta);
    j["classifier_epsilon"] = number(c.classifier_epsilon);
    j["container_epsilon"] = number(c.container_epsilon);
    j["zeta"] = optional_number(c.zeta);
    j["xi"] = optional_number(c.xi);
    j["container_c"] = number(c.container_c);
    j["wicket_C"] = number(c.wicket_C);
    return j;
}

ModelConstants constants_from_json(const Json& j) {
    const char* what = "constants";
    reject_unknown_keys(j,
                        {"classifier_delta", "classifier_epsilon", "container_epsilon", "zeta", "xi", "container_c",
                         "wicket_C"},
                        what);
    ModelConstants c;
    if (j.contains("classifier_delta")) c.classifier_delta = get_double(j, "classifier_delta", what);
    if (j.contains("classifier_epsilon")) c.classifier_epsilon = get_double(j, "classifier_epsilon", what);
    if (j.contains("container_epsilon")) c.container_epsilon = get_double(j, "container_epsilon", what);
    c.zeta = get_optional_double(j, "zeta", what);
    c.xi = get_optional_double(j, "xi", what);
    if (j.contains("container_c")) c.container_c = get_double(j, "container_c", what);
    if (j.contains("wicket_C")) c.wicket_C = get_double(j, "wicket_C", what);
    for (double v : {c.classifier_delta, c.classifier_epsilon, c.container_epsilon}) {
        if (!(v > 0 && v < 1)) throw ConfigError("constants: delta and epsilon values must lie in (0, 1)");
    }
    if (!(c.container_c > 0) || !(c.wicket_C > 0)) throw ConfigError("constants: c and C must be positive");
    if ((c.zeta && !(*c.zeta > 0)) || (c.xi && !(*c.xi > 0))) {
        throw ConfigError("constants: zeta and xi must be positive when given");
    }
    return c;
}

SweepConfig parse_sweep_config(const Json& j, std::optional<std::uint64_t> seed_override) {
    const char* what = "sweep config";
    reject_unknown_keys(j, {"n", "base", "p_grid", "trials", "seed", "budget"}, what);
    SweepConfig c;
    const std::uint64_t n = get_uint(j, "n", what);
    if (n < 1 || n > kMaxGround) throw ConfigError("sweep config: n out of range");
    c.n = static_cast<Element>(n);
    c.base = get_string(j, "base", what);
    c.trials = get_uint(j, "trials", what);
    if (c.trials < 1) throw ConfigError("sweep config: trials must be at least 1");
    if (j.contains("seed")) {
        c.seed = get_uint(j, "seed", what);
        if (seed_override && *seed_override != c.seed) {
            throw ConfigError("sweep config: seed in the file differs from --seed");
        }
    } else if (seed_override) {
        c.seed = *seed_override;
    } else {
        throw ConfigError("sweep config: a seed is required");
    }
    if (j.contains("budget")) c.budget = get_uint(j, "budget", what);
    if (j.contains("p_grid")) {
        const Json& g = j.at("p_grid");
        if (g.is_string()) {
            if (g.get<std::string>() != "auto") throw ConfigError("sweep config: p_grid must be an array or \"auto\"");
        } else if (g.is_array()) {
            std::vector<double> grid;
            for (const auto& v : g) {
                if (!v.is_number()) throw ConfigError("sweep config: p_grid entries must be numbers");
                const double p = v.get<double>();
                if (!(p >= 0 && p <= 1)) throw ConfigError("sweep config: p_grid entries must lie in [0, 1]");
                if (!grid.empty() && p < grid.back()) throw ConfigError("sweep config: p_grid must be ascending");
                grid.push_back(round_sig12(p));
            }
            if (grid.empty()) throw ConfigError("sweep config: p_grid is empty");
            c.p_grid = std::move(grid);
        } else {
            throw ConfigError("sweep config: p_grid must be an array or \"auto\"");
        }
    }
    try {
        parse_set_literal("construct:" + c.base, c.n);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("sweep config: base: ") + e.what());
    }
    return c;
}

Json to_json(const SweepConfig& c) {
    Json j;
    j["n"] = c.n;
    j["base"] = c.base;
    if (c.p_grid) {
        Json g = Json::array();
        for (double p : *c.p_grid) g.push_back(number(p));
        j["p_grid"] = g;
    } else {
        j["p_grid"] = "auto";
    }
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["budget"] = c.budget;
    return j;
}

std::vector<double> resolved_grid(const SweepConfig& c) {
    if (c.p_grid) return *c.p_grid;
    return default_grid(grid_centre_for(c.base, c.n));
}

namespace {

bool same12(double x, double y) { return round_sig12(x) == round_sig12(y); }

bool same12(const std::optional<double>& x, const std::optional<double>& y) {
    return x.has_value() == y.has_value() && (!x || same12(*x, *y));
}

}  // namespace

bool operator==(const ModelConstants& a, const ModelConstants& b) {
    return same12(a.classifier_delta, b.classifier_delta) && same12(a.classifier_epsilon, b.classifier_epsilon) &&
           same12(a.container_epsilon, b.container_epsilon) && same12(a.zeta, b.zeta) && same12(a.xi, b.xi) &&
           same12(a.container_c, b.container_c) && same12(a.wicket_C, b.wicket_C);
}

bool operator==(const SweepRecord& a, const SweepRecord& b) {
    auto same = [](const std::optional<ThresholdEstimate>& x, const std::optional<ThresholdEstimate>& y) {
        if (x.has_value() != y.has_value()) return false;
        return !x || (same12(x->p_lo, y->p_lo) && same12(x->p_hat, y->p_hat) && same12(x->p_hi, y->p_hi));
    };
    return a.config == b.config && a.constants == b.constants && a.curve == b.curve && same(a.threshold, b.threshold);
}

Json to_json(const SweepCurve& c) {
    Json j;
    j["n"] = c.n;
    j["base"] = c.base;
    j["seed"] = c.seed;
    j["budget"] = c.budget;
    j["trials_per_point"] = c.trials_per_point;
    j["non_conclusive"] = c.non_conclusive();
    Json pts = Json::array();
    for (const auto& p : c.points) {
        Json q;
        q["p"] = number(p.p);
        q["trials"] = p.trials;
        q["schur"] = p.schur;
        q["not_schur"] = p.not_schur;
        q["unknown"] = p.unknown;
        q["total_sample_size"] = p.total_sample_size;
        q["schur_fraction"] = number(p.schur_fraction());
        q["unknown_fraction"] = number(p.unknown_fraction());
        q["mean_sample_size"] = number(p.mean_sample_size());
        pts.push_back(q);
    }
    j["points"] = pts;
    return j;
}

SweepCurve curve_from_json(const Json& j) {
    const char* what = "curve";
    reject_unknown_keys(j, {"n", "base", "seed", "budget", "trials_per_point", "non_conclusive", "points"}, what);
    SweepCurve c;
    c.n = static_cast<Element>(get_uint(j, "n", what));
    c.base = get_string(j, "base", what);
    c.seed = get_uint(j, "seed", what);
    c.budget = get_uint(j, "budget", what);
    c.trials_per_point = get_uint(j, "trials_per_point", what);
    const Json& pts = require(j, "points", what);
    if (!pts.is_array()) throw ConfigError("curve: points must be an array");
    for (const auto& q : pts) {
        const char* pw = "curve point";
        reject_unknown_keys(q,
                            {"p", "trials", "schur", "not_schur", "unknown", "total_sample_size", "schur_fraction",
                             "unknown_fraction", "mean_sample_size"},
                            pw);
        SweepPoint p;
        p.p = get_double(q, "p", pw);
        p.trials = get_uint(q, "trials", pw);
        p.schur = get_uint(q, "schur", pw);
        p.not_schur = get_uint(q, "not_schur", pw);
        p.unknown = get_uint(q, "unknown", pw);
        p.total_sample_size = get_uint(q, "total_sample_size", pw);
        if (p.schur + p.not_schur + p.unknown != p.trials) {
            throw ConfigError("curve point: outcome counts do not add up to trials");
        }
        c.points.push_back(p);
    }
    return c;
}

Json to_json(const SweepRecord& r) {
    Json j;
    j["command"] = "sweep";
    j["config"] = to_json(r.config);
    j["constants"] = to_json(r.constants);
    j["curve"] = to_json(r.curve);
    if (r.threshold) {
        Json t;
        t["p_lo"] = number(r.threshold->p_lo);
        t["p_hat"] = number(r.threshold->p_hat);
        t["p_hi"] = number(r.threshold->p_hi);
        j["threshold"] = t;
    } else {
        j["threshold"] = nullptr;
    }
    return j;
}

SweepRecord sweep_record_from_json(const Json& j) {
    const char* what = "sweep record";
    reject_unknown_keys(j, {"command", "config", "constants", "curve", "threshold"}, what);
    if (get_string(j, "command", what) != "sweep") throw ConfigError("sweep record: command is not \"sweep\"");
    SweepRecord r;
    r.config = parse_sweep_config(require(j, "config", what));
    r.constants = constants_from_json(require(j, "constants", what));
    r.curve = curve_from_json(require(j, "curve", what));
    const Json& t = require(j, "threshold", what);
    if (!t.is_null()) {
        reject_unknown_keys(t, {"p_lo", "p_hat", "p_hi"}, "threshold");
        r.threshold = ThresholdEstimate{get_double(t, "p_lo", "threshold"), get_double(t, "p_hat", "threshold"),
                                        get_double(t, "p_hi", "threshold")};
    }
    return r;
}

SweepRecord run_sweep(const SweepConfig& config, const ModelConstants& constants, unsigned workers) {
    SweepRecord r;
    r.config = config;
    r.config.p_grid = resolved_grid(config);
    r.constants = constants;
    const IntSet a = parse_set_literal("construct:" + config.base, config.n);
    r.curve = sweep(a, config.n, config.base, *r.config.p_grid, config.trials,
                    TrialSettings{config.seed, config.budget, workers});
    try {
        ThresholdEstimate t = estimate_threshold(r.curve);
        t.p_lo = round_sig12(t.p_lo);
        t.p_hat = round_sig12(t.p_hat);
        t.p_hi = round_sig12(t.p_hi);
        r.threshold = t;
    } catch (const NoCrossing&) {
        r.threshold.reset();
    }
    return r;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ConfigError(origin + ": invalid JSON: " + e.what());
    }
}

std::string sweep_csv(const SweepCurve& c) {
    std::string out = "p,trials,schur,not_schur,unknown,mean_sample_size\n";
    for (const auto& p : c.points) {
        out += format_number(p.p) + ',' + std::to_string(p.trials) + ',' + std::to_string(p.schur) + ',' +
               std::to_string(p.not_schur) + ',' + std::to_string(p.unknown) + ',' +
               format_number(p.mean_sample_size()) + '\n';
    }
    return out;
}

double wilson_half_width(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return 0;
    constexpr double z = 1.959963984540054;
    const double m = static_cast<double>(trials);
    const double f = static_cast<double>(successes) / m;
    return z / (1 + z * z / m) * std::sqrt(f * (1 - f) / m + z * z / (4 * m * m));
}

std::string plot_data(const SweepCurve& c) {
    std::string out;
    for (const auto& p : c.points) {
        out += format_number(p.p) + ' ' + format_number(p.schur_fraction()) + ' ' +
               format_number(wilson_half_width(p.schur, p.decided())) + '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error while reading " + path);
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("error while writing " + path);
}

Json colouring_to_json(const Colouring& c) {
    Json j;
    j["red"] = format_compact(c.red);
    j["blue"] = format_compact(c.blue);
    return j;
}

ContainerLike container_from_json(const Json& j) {
    const char* what = "container";
    reject_unknown_keys(j, {"n", "red", "blue"}, what);
    try {
        IntSet red = parse_compact(get_string(j, "red", what));
        IntSet blue = parse_compact(get_string(j, "blue", what));
        Element n = std::max(red.ground(), blue.ground());
        if (j.contains("n")) {
            const std::uint64_t given = get_uint(j, "n", what);
            if (given < n || given > kMaxGround) throw ConfigError("container: n is smaller than a listed element");
            n = static_cast<Element>(given);
        }
        return ContainerLike(red.regrounded(n), blue.regrounded(n));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("container: ") + e.what());
    }
}

IntSet parse_set_literal(const std::string& text, Element n) {
    static const std::string prefix = "construct:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string name = text.substr(prefix.size());
        if (name == "empty") return IntSet(std::max<Element>(n, 1));
        IntSet s = resolve_construction(name, n).set;
        if (n > 0 && s.ground() != n) {
            if (s.max() > n) throw std::invalid_argument("construction exceeds [n]");
            s = s.regrounded(n);
        }
        return s;
    }
    if (text == "{}") return IntSet(std::max<Element>(n, 1));
    return parse_compact(text, n);
}

}  // namespace schurlab
