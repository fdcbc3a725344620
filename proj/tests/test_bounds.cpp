#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "schurlab/bounds.hpp"

using namespace schurlab;

TEST_CASE("lower tail formula") {
    CHECK(janson_lower_tail({1, 0, 0}) == 1.0);
    CHECK(janson_lower_tail({1, 0, 1}) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(janson_lower_tail({2, 2, 2}) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(janson_lower_tail({0, 0, 0}) == 1.0);
    CHECK_THROWS(janson_lower_tail({1, 0, 2}));
    CHECK_THROWS(janson_lower_tail({-1, 0, 0}));
    CHECK_THROWS(janson_lower_tail({1, -1, 0}));
    CHECK_THROWS(janson_lower_tail({1, 0, -0.5}));
}

namespace {

std::vector<std::array<Element, 3>> merged_hosts(const std::vector<SchurTriple>& f) {
    std::vector<std::array<Element, 3>> out;
    for (const auto& t : f) {
        std::array<Element, 3> h{t.x, t.y, t.z};
        std::sort(h.begin(), h.end());
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
    return out;
}

}  // namespace

TEST_CASE("triple moments on [5]") {
    const auto f = ordered_nondegenerate_triples(IntSet::full(5));
    CHECK(f.size() == 8);
    const TripleMoments m = triple_moments(f, 5, 0.1);
    CHECK(m.distinct_triples == 4);
    CHECK(m.mu_exact == doctest::Approx(4e-3).epsilon(1e-12));
    CHECK(m.delta_star == doctest::Approx(0.10125).epsilon(1e-12));
    CHECK(m.delta_exact == doctest::Approx(oracle::triple_delta(merged_hosts(f), 0.1)).epsilon(1e-12));
    CHECK(m.delta_exact <= m.delta_star);
    CHECK(triple_delta_star(5, 0.1) == doctest::Approx(0.10125).epsilon(1e-12));
    CHECK_THROWS(triple_moments({SchurTriple{2, 2, 4}}, 5, 0.1));
    CHECK_THROWS(triple_moments({SchurTriple{2, 4, 6}}, 5, 0.1));
    CHECK_THROWS(triple_moments({SchurTriple{1, 2, 4}}, 5, 0.1));
}

TEST_CASE("pair correlation sum stays under its closed-form cap") {
    std::mt19937_64 rng(44);
    for (int k = 0; k < 150; ++k) {
        const Element n = std::uniform_int_distribution<Element>(3, 60)(rng);
        const double p = std::uniform_real_distribution<double>(0.0, 1.0 / std::sqrt(double(n)))(rng);
        const IntSet s = oracle::random_subset(rng, n, std::uniform_real_distribution<double>(0.2, 1.0)(rng));
        auto f = ordered_nondegenerate_triples(s);
        std::shuffle(f.begin(), f.end(), rng);
        f.resize(f.size() / 2 + f.size() % 2);
        const TripleMoments m = triple_moments(f, n, p);
        const auto hosts = merged_hosts(f);
        REQUIRE(m.distinct_triples == hosts.size());
        REQUIRE(m.mu_exact == doctest::Approx(double(hosts.size()) * p * p * p).epsilon(1e-12));
        REQUIRE(m.delta_exact == doctest::Approx(oracle::triple_delta(hosts, p)).epsilon(1e-9));
        REQUIRE(m.delta_exact <= m.delta_star);
    }
}

TEST_CASE("ordered nondegenerate triples") {
    std::mt19937_64 rng(6);
    for (int k = 0; k < 50; ++k) {
        const IntSet s = oracle::random_subset(rng, 50, 0.5);
        const auto f = ordered_nondegenerate_triples(s);
        REQUIRE(f.size() == count_ordered_triples(s, true));
        for (const auto& t : f) {
            REQUIRE_FALSE(t.degenerate());
            REQUIRE(t.x + t.y == t.z);
            REQUIRE((s.contains(t.x) && s.contains(t.y) && s.contains(t.z)));
        }
    }
}

TEST_CASE("wicket correlation bound") {
    const WicketDeltaBound zero = wicket_delta_bound(1e6, 100, 0.0, 1.0);
    CHECK(zero.termwise == 0.0);
    CHECK(zero.simplified == 0.0);
    const WicketDeltaBound b = wicket_delta_bound(1e6, 100, 0.05, 1.0);
    CHECK(b.termwise <= b.simplified);
    CHECK(b.simplified_dominates);
    CHECK(b.simplified == doctest::Approx(1e6 * std::pow(0.05, 9) * std::ldexp(1.0, 108)).epsilon(1e-12));
    CHECK_THROWS(wicket_delta_bound(1e6, 100, 0.2, 1.0));
    CHECK_THROWS(wicket_delta_bound(1e6, 100, 0.05, 0.0));
    CHECK_THROWS(wicket_delta_bound(-1, 100, 0.05, 1.0));
    // positive coefficients: every component rises with p
    for (Element n : {10u, 100u, 10000u}) {
        double prev_t = -1, prev_c = -1, prev_s = -1;
        for (int i = 0; i <= 40; ++i) {
            const double p = i / 40.0 / std::sqrt(double(n));
            const auto w = wicket_delta_bound(123.0, n, p, 1.0);
            REQUIRE(w.termwise >= prev_t);
            REQUIRE(w.collected >= prev_c);
            REQUIRE(w.simplified >= prev_s);
            REQUIRE(w.simplified_dominates);
            prev_t = w.termwise;
            prev_c = w.collected;
            prev_s = w.simplified;
        }
    }
}

TEST_CASE("dense case classifier") {
    for (Element n = 20; n <= 200; n += 9) {
        const auto r = classify_dense_case(IntSet::full(n), 0.125);
        CHECK(r.label == DenseCase::CaseI);
    }
    const Element n = 1000;
    IntSet odds_plus_two(n);
    for (Element x = 1; x <= n; x += 2) odds_plus_two.insert(x);
    odds_plus_two.insert(2);
    const auto r1 = classify_dense_case(odds_plus_two);
    CHECK(r1.label == DenseCase::CaseII1);
    CHECK(r1.even_count == 1);
    CHECK(r1.missing_odds == 0);
    const auto r2 = classify_dense_case(IntSet::interval(n, 500 - 5, n));
    CHECK(r2.label == DenseCase::CaseII2);
    CHECK(r2.missing_top == 0);
    CHECK(r2.t == 6);
    CHECK(classify_dense_case(IntSet::of(n, {1, 2, 4})).label == DenseCase::Unclassified);
    CHECK_THROWS(classify_dense_case(IntSet::full(10), 0.0));
    CHECK_THROWS(classify_dense_case(IntSet::full(10), 0.1, 1.0));
    CHECK(std::string(dense_case_name(DenseCase::CaseII2)) == "CaseII2");
}

TEST_CASE("classifier statistics and monotonicity in delta") {
    std::mt19937_64 rng(12);
    const double deltas[] = {1e-4, 1e-3, 1e-2, 0.05, 0.2};
    for (int k = 0; k < 200; ++k) {
        const Element n = std::uniform_int_distribution<Element>(5, 120)(rng);
        const IntSet a = oracle::random_subset(rng, n, std::uniform_real_distribution<double>(0.05, 0.95)(rng));
        std::uint64_t evens = 0, missing_odds = 0, missing_top = 0;
        for (Element x = 1; x <= n; ++x) {
            if (a.contains(x) && x % 2 == 0) ++evens;
            if (!a.contains(x) && x % 2 == 1) ++missing_odds;
            if (!a.contains(x) && 2 * x >= n) ++missing_top;
        }
        bool left_case_one = false;
        for (double d : deltas) {
            const auto r = classify_dense_case(a, d);
            REQUIRE(r.triple_sets == oracle::hosting_sets(a).size());
            REQUIRE(r.even_count == evens);
            REQUIRE(r.missing_odds == missing_odds);
            REQUIRE(r.missing_top == missing_top);
            REQUIRE(r.t == std::int64_t(a.size()) - std::int64_t((n + 1) / 2));
            REQUIRE(classify_dense_case(a, d).label == r.label);
            if (r.label != DenseCase::CaseI) left_case_one = true;
            if (left_case_one) REQUIRE(r.label != DenseCase::CaseI);
        }
    }
}
