#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "schurlab/constructions.hpp"
#include "schurlab/montecarlo.hpp"

using namespace schurlab;

TEST_CASE("sampling endpoints and determinism") {
    CHECK(sample_perturbation(1000, 0.0, 1, 0).empty());
    CHECK(sample_perturbation(1000, 1.0, 1, 0) == IntSet::full(1000));
    CHECK(sample_perturbation(9000, 1.0, 1, 0) == IntSet::full(9000));
    CHECK(sample_perturbation(500, 0.3, 42, 7) == sample_perturbation(500, 0.3, 42, 7));
    CHECK(sample_perturbation(500, 0.3, 42, 7) != sample_perturbation(500, 0.3, 42, 8));
    CHECK(sample_perturbation(500, 0.3, 42, 7) != sample_perturbation(500, 0.3, 43, 7));
    CHECK_THROWS(sample_perturbation(10, 1.5, 1, 0));
    CHECK_THROWS(sample_perturbation(10, -0.1, 1, 0));
    auto a = trial_generator(5, 9), b = trial_generator(5, 9);
    CHECK(a() == b());
}

TEST_CASE("sample size concentrates around np") {
    struct Case {
        Element n;
        double p;
    };
    for (const Case c : {Case{100, 0.1}, Case{5000, 0.01}, Case{20000, 0.003}, Case{9000, 0.5}}) {
        const int trials = 2000;
        double sum = 0;
        for (int i = 0; i < trials; ++i) sum += double(sample_perturbation(c.n, c.p, 77, i).size());
        const double mean = sum / trials;
        const double sd = std::sqrt(c.n * c.p * (1 - c.p) / trials);
        INFO("n=" << c.n << " p=" << c.p << " mean=" << mean);
        CHECK(std::abs(mean - c.n * c.p) <= 5 * sd);
    }
}

TEST_CASE("every position is equally likely, including across blocks") {
    const Element n = 3 * kSampleBlock + 100;
    const double p = 0.02;
    const int trials = 3000;
    std::vector<int> hits(n + 1, 0);
    for (int i = 0; i < trials; ++i) sample_perturbation(n, p, 3, i).for_each([&](Element x) { ++hits[x]; });
    // 8 equal bins; each total is Binomial(trials * bin_width, p)
    const Element bins = 8, width = n / bins;
    for (Element b = 0; b < bins; ++b) {
        double count = 0;
        for (Element x = b * width + 1; x <= (b + 1) * width; ++x) count += hits[x];
        const double expect = double(trials) * width * p;
        CHECK(std::abs(count - expect) <= 5 * std::sqrt(expect * (1 - p)));
    }
}

TEST_CASE("trial batches") {
    const ColouredSet m = mod5_construction(20);
    TrialSettings s{11, kDefaultBudget, 1};
    for (const auto& r : run_trials(m.set, 20, 0.0, 20, s)) {
        CHECK(r.outcome == SchurVerdict::NotSchur);
        CHECK(r.sample_size == 0);
    }
    for (const auto& r : run_trials(IntSet(5), 5, 1.0, 10, s)) CHECK(r.outcome == SchurVerdict::Schur);
    TrialSettings zero{11, 0, 1};
    for (const auto& r : run_trials(IntSet::full(5), 5, 0.5, 10, zero)) CHECK(r.outcome == SchurVerdict::Unknown);
    CHECK_THROWS(run_trials(IntSet(5), 5, 0.5, 0, s));
    CHECK_THROWS(run_trials(IntSet::full(8), 5, 0.5, 3, s));

    const auto recs = run_trials(m.set, 20, 0.1, 30, s, 100);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].trial_index == 100 + i);
        CHECK(recs[i].outcome == redecide_trial(m.set, 20, 0.1, 11, recs[i].trial_index, kDefaultBudget));
        CHECK(recs[i].sample_size == sample_perturbation(20, 0.1, 11, recs[i].trial_index).size());
    }
}

TEST_CASE("worker count leaves results unchanged") {
    const DenseZeroStatement d = dense_zero_statement(80, 4);
    const std::vector<double> grid{0.005, 0.02, 0.08, 0.3};
    const SweepCurve one = sweep(d.A, 80, "dense0", grid, 40, {5, kDefaultBudget, 1});
    for (unsigned w : {2u, 4u, 16u}) CHECK(sweep(d.A, 80, "dense0", grid, 40, {5, kDefaultBudget, w}) == one);
    const auto r1 = run_trials(d.A, 80, 0.05, 50, {9, kDefaultBudget, 1});
    const auto r4 = run_trials(d.A, 80, 0.05, 50, {9, kDefaultBudget, 4});
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].outcome == r4[i].outcome);
        CHECK(r1[i].sample_size == r4[i].sample_size);
        CHECK(r1[i].nodes_explored == r4[i].nodes_explored);
    }
}

TEST_CASE("sweep bookkeeping") {
    const ColouredSet m = mod5_construction(12);
    const SweepCurve c = sweep(m.set, 12, "mod5", {0.0, 1.0}, 25, {1, kDefaultBudget, 1});
    REQUIRE(c.points.size() == 2);
    CHECK(c.points[0].schur_fraction() == 0.0);
    CHECK(c.points[1].schur_fraction() == 1.0);
    CHECK(c.points[1].mean_sample_size() == 12.0);
    CHECK(c.trials_per_point == 25);
    CHECK_FALSE(c.non_conclusive());
    const SweepCurve dup = sweep(m.set, 12, "mod5", {0.3, 0.3}, 25, {1, kDefaultBudget, 1});
    CHECK(dup.points[0].trials == dup.points[1].trials);
    CHECK_THROWS(sweep(m.set, 12, "mod5", {0.5, 0.2}, 5, {}));
    CHECK_THROWS(sweep(m.set, 12, "mod5", {0.5, 1.2}, 5, {}));
    CHECK_THROWS(sweep(m.set, 12, "mod5", {0.5}, 0, {}));
    const SweepCurve unknown = sweep(IntSet::full(6), 6, "x", {0.5}, 10, {1, 0, 1});
    CHECK(unknown.points[0].unknown_fraction() == 1.0);
    CHECK(unknown.points[0].schur_fraction() == 0.0);
    CHECK(unknown.non_conclusive());
}

TEST_CASE("schur fraction rises along the grid on the dense construction") {
    const Element n = 100;
    const DenseZeroStatement d = dense_zero_statement(n, 5);
    const auto grid = default_grid(theoretical_thresholds(n, 5).dense.value());
    const SweepCurve c = sweep(d.A, n, "dense0", grid, 200, {2024, kDefaultBudget, default_workers()});
    std::vector<double> values, weights;
    for (const auto& pt : c.points) {
        values.push_back(pt.schur_fraction());
        weights.push_back(double(pt.decided()));
    }
    const auto fit = isotonic_fit(values, weights);
    for (std::size_t i = 1; i < fit.size(); ++i) CHECK(fit[i] >= fit[i - 1]);
    for (std::size_t i = 1; i < c.points.size(); ++i) {
        const auto& a = c.points[i - 1];
        const auto& b = c.points[i];
        const double fa = a.schur_fraction(), fb = b.schur_fraction();
        // pooled binomial noise on the difference
        const double q = (fa * a.decided() + fb * b.decided()) / double(a.decided() + b.decided());
        const double sigma = std::sqrt(q * (1 - q) * (1.0 / a.decided() + 1.0 / b.decided()));
        INFO("p=" << a.p << " -> " << b.p);
        CHECK(fa - fb <= 3 * sigma + 1e-12);
    }
    CHECK(c.points.front().schur_fraction() < 0.5);
    CHECK(c.points.back().schur_fraction() > 0.5);
}

TEST_CASE("isotonic fit") {
    CHECK(isotonic_fit({0.1, 0.2, 0.3}, {1, 1, 1}) == std::vector<double>{0.1, 0.2, 0.3});
    const auto f = isotonic_fit({0.4, 0.2, 0.9}, {1, 3, 1});
    CHECK(f[0] == doctest::Approx(0.25));
    CHECK(f[1] == doctest::Approx(0.25));
    CHECK(f[2] == doctest::Approx(0.9));
    const auto g = isotonic_fit({1.0, 0.0}, {0, 5});
    CHECK(g[0] <= g[1]);
    CHECK_THROWS(isotonic_fit({0.1}, {1, 2}));
}

namespace {

SweepCurve synthetic(const std::vector<std::pair<double, std::uint64_t>>& pts, std::uint64_t trials) {
    SweepCurve c;
    c.n = 10;
    c.trials_per_point = trials;
    for (const auto& [p, schur] : pts) {
        SweepPoint pt;
        pt.p = p;
        pt.trials = trials;
        pt.schur = schur;
        pt.not_schur = trials - schur;
        c.points.push_back(pt);
    }
    return c;
}

}  // namespace

TEST_CASE("threshold estimate") {
    const auto e = estimate_threshold(synthetic({{0.001, 0}, {0.01, 4}, {0.1, 10}}, 10));
    CHECK(e.p_lo == 0.01);
    CHECK(e.p_hi == 0.1);
    CHECK(e.p_hat > 0.01);
    CHECK(e.p_hat < 0.1);
    CHECK_THROWS_AS(estimate_threshold(synthetic({{0.1, 10}, {0.2, 10}}, 10)), NoCrossing);
    CHECK_THROWS_AS(estimate_threshold(synthetic({{0.1, 0}, {0.2, 0}}, 10)), NoCrossing);
    CHECK_THROWS_AS(estimate_threshold(synthetic({{0.1, 0}}, 10)), NoCrossing);
    const auto unit = estimate_threshold(synthetic({{0.0, 0}, {1.0, 10}}, 10));
    CHECK(unit.p_hat > 0.0);
    CHECK(unit.p_hat < 1.0);
    CHECK(unit.p_hat == doctest::Approx(0.5));
    // a dip is pooled away before interpolation
    const auto dip = estimate_threshold(synthetic({{0.1, 0}, {0.2, 7}, {0.3, 3}, {0.4, 10}}, 10));
    CHECK(dip.p_lo <= dip.p_hat);
    CHECK(dip.p_hat <= dip.p_hi);
}

TEST_CASE("closed-form thresholds") {
    const auto a = theoretical_thresholds(1'000'000, 10);
    CHECK(a.dense.value() == doctest::Approx(1e-4));
    CHECK(a.random_set == doctest::Approx(1e-3));
    CHECK(a.positive_density == doctest::Approx(1e-4));
    CHECK(theoretical_thresholds(1'000'000, 10'000).dense.value() == doctest::Approx(1e-4));
    CHECK(theoretical_thresholds(1'000'000, 1'000'000).dense.value() == doctest::Approx(1e-6));
    const auto s = theoretical_thresholds(10'000, std::nullopt, 100);
    CHECK(s.sparse_lower.value() == doctest::Approx(1e-2));
    CHECK(s.sparse_upper.value() == doctest::Approx(std::pow(1e52 * 100, -1.0 / 27) * std::log(1e4)));
    CHECK_FALSE(s.dense.has_value());
    CHECK_THROWS(theoretical_thresholds(0));
    const auto g = default_grid(1e-3);
    CHECK(g.size() == 11);
    CHECK(g.front() == doctest::Approx(1e-3 / 32));
    CHECK(g.back() == doctest::Approx(1e-3 * 32));
    CHECK(default_grid(0.1).back() <= 1.0);
    CHECK(round_sig12(0.1 + 0.2) == 0.3);
    CHECK(grid_centre_for("dense0:1000,10", 1000) == doctest::Approx(0.01));
    CHECK(grid_centre_for("sparse:1000,8", 1000) == doctest::Approx(0.05));
    CHECK(grid_centre_for("odd", 1000) == doctest::Approx(0.01));
}

TEST_CASE("sparse-regime obstruction structure") {
    const Element n = 120, s = 8;
    const double p = 4 * std::cbrt(1.0 / (double(n) * s));
    const auto st = run_sparse_structure_trials(n, s, p, 30, {99, kDefaultBudget, 1});
    CHECK(st.trials == 30);
    CHECK(st.not_colourable + st.colourable + st.unknown == 30);
    CHECK(st.all_properties <= st.not_colourable);
    CHECK(st.cycle_found <= st.uniform3);
    CHECK(st.cycle_at_most_one_t2_pair <= st.cycle_found);
    CHECK(st.all_properties_fraction() >= 0.0);
    CHECK(st.all_properties_fraction() <= 1.0);
    const auto again = run_sparse_structure_trials(n, s, p, 30, {99, kDefaultBudget, 3});
    CHECK(again.all_properties == st.all_properties);
    CHECK(again.total_obstruction_edges == st.total_obstruction_edges);
}

TEST_CASE("worker default reads the environment") {
    setenv("SCHURLAB_WORKERS", "3", 1);
    CHECK(default_workers() == 3);
    unsetenv("SCHURLAB_WORKERS");
    CHECK(default_workers() >= 1);
}
