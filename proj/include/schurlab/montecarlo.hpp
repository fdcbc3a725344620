#ifndef SCHURLAB_MONTECARLO_HPP
#define SCHURLAB_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurlab/intset.hpp"
#include "schurlab/solver.hpp"

namespace schurlab {

/// Generator for one trial, derived from (master_seed, trial_index) only.
std::mt19937_64 trial_generator(std::uint64_t master_seed, std::uint64_t trial_index);

inline constexpr Element kSampleBlock = 4096;

/// Each element of [n] independently with probability p, drawn blockwise.
IntSet sample_perturbation(Element n, double p, std::mt19937_64& rng);
IntSet sample_perturbation(Element n, double p, std::uint64_t master_seed, std::uint64_t trial_index);

/// Worker count from SCHURLAB_WORKERS, else hardware concurrency, at least 1.
unsigned default_workers();

struct TrialRecord {
    std::uint64_t trial_index = 0;
    double p = 0;
    std::uint64_t sample_size = 0;
    SchurVerdict outcome = SchurVerdict::Unknown;
    std::uint64_t nodes_explored = 0;
    double wall_time = 0;  ///< seconds; informational, never part of aggregated output
};

struct TrialSettings {
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

/**
 * Decides A ∪ P for trials with indices first_index .. first_index + trials - 1.
 * Records come back ordered by index whatever the worker count.
 */
std::vector<TrialRecord> run_trials(const IntSet& a, Element n, double p, std::uint64_t trials,
                                    const TrialSettings& settings, std::uint64_t first_index = 0);

/// Re-derives a record's outcome from its seed and index.
SchurVerdict redecide_trial(const IntSet& a, Element n, double p, std::uint64_t seed, std::uint64_t trial_index,
                            std::uint64_t budget);

struct SweepPoint {
    double p = 0;
    std::uint64_t trials = 0, schur = 0, not_schur = 0, unknown = 0;
    std::uint64_t total_sample_size = 0;

    std::uint64_t decided() const { return schur + not_schur; }
    /// Over decided trials; 0 when none decided.
    double schur_fraction() const;
    double unknown_fraction() const;
    double mean_sample_size() const;

    friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

inline constexpr double kNonConclusiveUnknown = 0.10;

struct SweepCurve {
    Element n = 0;
    std::string base;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t trials_per_point = 0;
    std::vector<SweepPoint> points;

    /// Some grid point has more than 10% unknown outcomes.
    bool non_conclusive() const;
    friend bool operator==(const SweepCurve&, const SweepCurve&) = default;
};

/// Grid point g uses trial indices g * trials .. g * trials + trials - 1.
SweepCurve sweep(const IntSet& a, Element n, const std::string& base_name, const std::vector<double>& p_grid,
                 std::uint64_t trials, const TrialSettings& settings);

class NoCrossing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ThresholdEstimate {
    double p_lo = 0, p_hat = 0, p_hi = 0;
};

/// Weighted pool-adjacent-violators fit, non-decreasing.
std::vector<double> isotonic_fit(const std::vector<double>& values, const std::vector<double>& weights);

/// 1/2 crossing of the isotonic fit of schur_fraction, linearly interpolated in p.
ThresholdEstimate estimate_threshold(const SweepCurve& curve);

struct TheoreticalThresholds {
    Element n = 0;
    std::optional<Element> t, s;
    double random_set = 0;        ///< n^{-1/2}
    double positive_density = 0;  ///< n^{-2/3}
    std::optional<double> dense;         ///< min(n^{-2/3}, 1/t)
    std::optional<double> sparse_lower;  ///< (ns)^{-1/3}
    std::optional<double> sparse_upper;  ///< (n^13 s)^{-1/27} ln n
};

TheoreticalThresholds theoretical_thresholds(Element n, std::optional<Element> t = std::nullopt,
                                             std::optional<Element> s = std::nullopt);

/// Geometric grid with ratio 2 from centre/32 to 32 centre, values above 1 dropped.
std::vector<double> default_grid(double centre);

/// Rounds to 12 significant digits so grid values survive text round-trips.
double round_sig12(double x);

/// Grid centre for a construction name: dense threshold, sparse lower threshold, or n^{-2/3}.
double grid_centre_for(const std::string& base_name, Element n);

struct SparseStructureStats {
    std::uint64_t trials = 0;
    std::uint64_t not_colourable = 0;
    std::uint64_t colourable = 0;
    std::uint64_t unknown = 0;  ///< budget ran out during solving or extraction
    std::uint64_t uniform3 = 0, one_base_per_edge = 0, linear = 0, all_properties = 0;
    std::uint64_t cycle_found = 0;
    std::uint64_t cycle_at_most_one_t2_pair = 0;
    std::uint64_t total_obstruction_edges = 0;

    double all_properties_fraction() const;
};

/**
 * For each trial: P ~ [n]_p, colour A_s ∪ P with A_s = top s elements forced
 * blue; when that fails, extract an edge-minimal obstruction and record its
 * structure against base A_s.
 */
SparseStructureStats run_sparse_structure_trials(Element n, Element s, double p, std::uint64_t trials,
                                                 const TrialSettings& settings);

}  // namespace schurlab

#endif  // SCHURLAB_MONTECARLO_HPP
