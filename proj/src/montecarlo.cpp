#include "schurlab/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "schurlab/constructions.hpp"

namespace schurlab {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Runs job(i) for i in [0, count) across workers; each index touched once.
template <class Job>
void parallel_for(std::size_t count, unsigned workers, Job&& job) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) job(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

std::mt19937_64 trial_generator(std::uint64_t master_seed, std::uint64_t trial_index) {
    std::uint64_t state = master_seed;
    const std::uint64_t a = splitmix64(state);
    state ^= trial_index * 0xD1B54A32D192ED03ull;
    const std::uint64_t b = splitmix64(state);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
}

IntSet sample_perturbation(Element n, double p, std::mt19937_64& rng) {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
    IntSet out(n);
    if (p == 0) return out;
    if (p == 1) return IntSet::full(n);
    std::array<std::uint64_t, kSampleBlock / 64> taken{};
    for (Element start = 1; start <= n; start += kSampleBlock) {
        const Element len = std::min<Element>(kSampleBlock, n - start + 1);
        std::binomial_distribution<Element> count_dist(len, p);
        const Element k = count_dist(rng);
        // Floyd's selection of k distinct offsets in [0, len)
        taken.fill(0);
        for (Element j = len - k; j < len; ++j) {
            const Element r = std::uniform_int_distribution<Element>(0, j)(rng);
            const bool seen = (taken[r >> 6] >> (r & 63)) & 1u;
            const Element pick = seen ? j : r;
            taken[pick >> 6] |= std::uint64_t{1} << (pick & 63);
        }
        for (std::size_t w = 0; w < taken.size(); ++w) {
            std::uint64_t bits = taken[w];
            while (bits) {
                const auto off = static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
                out.insert(start + off);
            }
        }
    }
    return out;
}

IntSet sample_perturbation(Element n, double p, std::uint64_t master_seed, std::uint64_t trial_index) {
    auto rng = trial_generator(master_seed, trial_index);
    return sample_perturbation(n, p, rng);
}

unsigned default_workers() {
    if (const char* env = std::getenv("SCHURLAB_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

IntSet base_union(const IntSet& a, Element n, const IntSet& p) {
    if (a.max() > n) throw std::invalid_argument("base set exceeds [n]");
    const IntSet base = a.ground() == n ? a : a.regrounded(n);
    return base | p;
}

}  // namespace

std::vector<TrialRecord> run_trials(const IntSet& a, Element n, double p, std::uint64_t trials,
                                    const TrialSettings& settings, std::uint64_t first_index) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    std::vector<TrialRecord> out(trials);
    parallel_for(trials, settings.workers, [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        TrialRecord& r = out[i];
        r.trial_index = first_index + i;
        r.p = p;
        const IntSet sample = sample_perturbation(n, p, settings.seed, r.trial_index);
        r.sample_size = sample.size();
        const SolveOutcome o = find_schur_colouring(base_union(a, n, sample), {}, settings.budget);
        r.nodes_explored = o.nodes_explored;
        r.outcome = o.status == SolveStatus::Colourable      ? SchurVerdict::NotSchur
                    : o.status == SolveStatus::NotColourable ? SchurVerdict::Schur
                                                             : SchurVerdict::Unknown;
        r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    return out;
}

SchurVerdict redecide_trial(const IntSet& a, Element n, double p, std::uint64_t seed, std::uint64_t trial_index,
                            std::uint64_t budget) {
    return is_schur(base_union(a, n, sample_perturbation(n, p, seed, trial_index)), budget);
}

double SweepPoint::schur_fraction() const {
    return decided() ? static_cast<double>(schur) / static_cast<double>(decided()) : 0.0;
}

double SweepPoint::unknown_fraction() const {
    return trials ? static_cast<double>(unknown) / static_cast<double>(trials) : 0.0;
}

double SweepPoint::mean_sample_size() const {
    return trials ? static_cast<double>(total_sample_size) / static_cast<double>(trials) : 0.0;
}

bool SweepCurve::non_conclusive() const {
    return std::any_of(points.begin(), points.end(),
                       [](const SweepPoint& pt) { return pt.unknown_fraction() > kNonConclusiveUnknown; });
}

SweepCurve sweep(const IntSet& a, Element n, const std::string& base_name, const std::vector<double>& p_grid,
                 std::uint64_t trials, const TrialSettings& settings) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    for (std::size_t g = 0; g < p_grid.size(); ++g) {
        if (!(p_grid[g] >= 0 && p_grid[g] <= 1)) throw std::invalid_argument("grid values must lie in [0, 1]");
        if (g > 0 && p_grid[g] < p_grid[g - 1]) throw std::invalid_argument("grid must be ascending");
    }
    SweepCurve curve;
    curve.n = n;
    curve.base = base_name;
    curve.seed = settings.seed;
    curve.budget = settings.budget;
    curve.trials_per_point = trials;
    for (std::size_t g = 0; g < p_grid.size(); ++g) {
        const auto records = run_trials(a, n, p_grid[g], trials, settings, g * trials);
        SweepPoint pt;
        pt.p = p_grid[g];
        pt.trials = trials;
        for (const auto& r : records) {
            pt.total_sample_size += r.sample_size;
            switch (r.outcome) {
                case SchurVerdict::Schur: ++pt.schur; break;
                case SchurVerdict::NotSchur: ++pt.not_schur; break;
                case SchurVerdict::Unknown: ++pt.unknown; break;
            }
        }
        curve.points.push_back(pt);
    }
    return curve;
}

std::vector<double> isotonic_fit(const std::vector<double>& values, const std::vector<double>& weights) {
    if (values.size() != weights.size()) throw std::invalid_argument("values and weights differ in length");
    struct Block {
        double mean, weight;
        std::size_t len;
    };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < values.size(); ++i) {
        blocks.push_back({values[i], weights[i], 1});
        while (blocks.size() > 1 && blocks[blocks.size() - 2].mean > blocks.back().mean) {
            const Block b = blocks.back();
            blocks.pop_back();
            Block& a = blocks.back();
            const double w = a.weight + b.weight;
            a.mean = w > 0 ? (a.mean * a.weight + b.mean * b.weight) / w : (a.mean + b.mean) / 2;
            a.weight = w;
            a.len += b.len;
        }
    }
    std::vector<double> out;
    for (const auto& b : blocks) out.insert(out.end(), b.len, b.mean);
    return out;
}

ThresholdEstimate estimate_threshold(const SweepCurve& curve) {
    std::vector<double> ps, fs, ws;
    for (const auto& pt : curve.points) {
        if (pt.decided() == 0) continue;
        ps.push_back(pt.p);
        fs.push_back(pt.schur_fraction());
        ws.push_back(static_cast<double>(pt.decided()));
    }
    if (ps.size() < 2) throw NoCrossing("fewer than two grid points with decided trials");
    const auto fit = isotonic_fit(fs, ws);
    if (fit.front() >= 0.5) throw NoCrossing("schur fraction is at least 1/2 across the whole grid");
    for (std::size_t i = 1; i < fit.size(); ++i) {
        if (fit[i] >= 0.5) {
            const double f0 = fit[i - 1], f1 = fit[i];
            ThresholdEstimate e;
            e.p_lo = ps[i - 1];
            e.p_hi = ps[i];
            e.p_hat = e.p_lo + (0.5 - f0) / (f1 - f0) * (e.p_hi - e.p_lo);
            return e;
        }
    }
    throw NoCrossing("schur fraction stays below 1/2 across the whole grid");
}

TheoreticalThresholds theoretical_thresholds(Element n, std::optional<Element> t, std::optional<Element> s) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    TheoreticalThresholds r;
    const double nn = n;
    r.n = n;
    r.t = t;
    r.s = s;
    r.random_set = 1.0 / std::sqrt(nn);
    r.positive_density = std::pow(nn, -2.0 / 3.0);
    if (t) {
        if (*t < 1) throw std::invalid_argument("t must be positive");
        r.dense = std::min(r.positive_density, 1.0 / static_cast<double>(*t));
    }
    if (s) {
        if (*s < 1) throw std::invalid_argument("s must be positive");
        const double ss = *s;
        r.sparse_lower = std::cbrt(1.0 / (nn * ss));
        // (n^13 s)^{-1/27} evaluated in logs to stay finite for large n
        r.sparse_upper = std::exp(-(13.0 * std::log(nn) + std::log(ss)) / 27.0) * std::log(nn);
    }
    return r;
}

double round_sig12(double x) {
    if (x == 0 || !std::isfinite(x)) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::vector<double> default_grid(double centre) {
    if (!(centre > 0)) throw std::invalid_argument("grid centre must be positive");
    std::vector<double> grid;
    for (int k = -5; k <= 5; ++k) {
        const double v = round_sig12(std::ldexp(centre, k));
        if (v <= 1.0) grid.push_back(v);
    }
    return grid;
}

double grid_centre_for(const std::string& base_name, Element n) {
    const std::size_t colon = base_name.find(':');
    const std::string head = base_name.substr(0, colon);
    if (colon != std::string::npos && (head == "dense0" || head == "sparse")) {
        unsigned long a = 0, b = 0;
        if (std::sscanf(base_name.c_str() + colon + 1, "%lu,%lu", &a, &b) == 2) {
            if (head == "dense0") return *theoretical_thresholds(n, static_cast<Element>(b)).dense;
            return *theoretical_thresholds(n, std::nullopt, static_cast<Element>(b)).sparse_lower;
        }
    }
    if (base_name == "empty") return theoretical_thresholds(n).random_set;
    return theoretical_thresholds(n).positive_density;
}

double SparseStructureStats::all_properties_fraction() const {
    return not_colourable ? static_cast<double>(all_properties) / static_cast<double>(not_colourable) : 0.0;
}

SparseStructureStats run_sparse_structure_trials(Element n, Element s, double p, std::uint64_t trials,
                                                 const TrialSettings& settings) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    const IntSet base = sparse_base(n, s);
    const ColourConstraint constraint = ColourConstraint::blue_only(base);

    struct One {
        int state = 0;  // 0 colourable, 1 obstruction, 2 unknown
        HminReport props;
        bool cycle = false, cycle_ok = false;
        std::size_t edges = 0;
    };
    std::vector<One> results(trials);
    parallel_for(trials, settings.workers, [&](std::size_t i) {
        const IntSet sample = sample_perturbation(n, p, settings.seed, i);
        const ObstructionOutcome o = minimal_obstruction(base | sample, constraint, settings.budget);
        One& r = results[i];
        if (o.status == SolveStatus::Colourable) return;
        if (o.status == SolveStatus::BudgetExceeded || !o.obstruction) {
            r.state = 2;
            return;
        }
        r.state = 1;
        r.edges = o.obstruction->edges.size();
        r.props = check_hmin_properties(*o.obstruction, base);
        if (r.props.uniform3) {
            if (auto c = find_loose_cycle(*o.obstruction, base)) {
                r.cycle = true;
                r.cycle_ok = c->consecutive_t2_pairs <= 1;
            }
        }
    });

    SparseStructureStats st;
    st.trials = trials;
    for (const auto& r : results) {
        if (r.state == 0) {
            ++st.colourable;
            continue;
        }
        if (r.state == 2) {
            ++st.unknown;
            continue;
        }
        ++st.not_colourable;
        st.uniform3 += r.props.uniform3;
        st.one_base_per_edge += r.props.one_base_per_edge;
        st.linear += r.props.linear;
        st.all_properties += r.props.all();
        st.cycle_found += r.cycle;
        st.cycle_at_most_one_t2_pair += r.cycle_ok;
        st.total_obstruction_edges += r.edges;
    }
    return st;
}

}  // namespace schurlab
