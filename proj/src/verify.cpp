#include "schurlab/verify.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "schurlab/bounds.hpp"
#include "schurlab/constructions.hpp"
#include "schurlab/solver.hpp"
#include "schurlab/wickets.hpp"

namespace schurlab {

void VerifyReport::record(std::string what) {
    ++violations;
    if (examples.size() < 10) examples.push_back(std::move(what));
}

namespace {

void check_schur(VerifyReport& r, const IntSet& s, const std::string& label) {
    ++r.cases;
    switch (is_schur(s)) {
        case SchurVerdict::Schur: break;
        case SchurVerdict::NotSchur: r.record(label + " {" + format_compact(s) + "} has a Schur colouring"); break;
        case SchurVerdict::Unknown: ++r.budget_exceeded; break;
    }
}

std::string triple_label(const char* name, Element a, Element x, Element d) {
    return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(x) + "," + std::to_string(d) + ")";
}

}  // namespace

VerifyReport verify_large_subsets(Element n_min, Element n_max) {
    if (n_min < 5 || n_max > kExhaustiveLimit || n_min > n_max) {
        throw std::invalid_argument("hu suite needs 5 <= n_min <= n_max <= " + std::to_string(kExhaustiveLimit));
    }
    VerifyReport r;
    r.suite = "hu";
    for (Element n = n_min; n <= n_max; ++n) {
        const Element k = (4 * n + 4) / 5;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            if (static_cast<Element>(std::popcount(mask)) <= k) continue;
            IntSet s(n);
            for (Element x = 1; x <= n; ++x) {
                if (mask >> (x - 1) & 1u) s.insert(x);
            }
            check_schur(r, s, "n=" + std::to_string(n));
        }
        const ColouredSet m = mod5_construction(n);
        ++r.cases;
        if (m.set.size() != k) r.record("mod 5 set at n=" + std::to_string(n) + " has the wrong size");
        if (!validate_colouring(m.set, m.colouring).empty()) {
            r.record("mod 5 colouring at n=" + std::to_string(n) + " is not a Schur colouring");
        }
    }
    return r;
}

VerifyReport verify_eleven_value_sets(Element exhaustive_max, std::uint64_t random_count, Element random_max,
                           std::uint64_t seed) {
    VerifyReport r;
    r.suite = "prop31";
    for (Element a = 1; a <= exhaustive_max; ++a) {
        for (Element d = 1; a + 3 * d <= exhaustive_max; ++d) {
            for (Element x = 1; a + x + 3 * d <= exhaustive_max; ++x) {
                check_schur(r, L1(a, x, d), triple_label("L1", a, x, d));
            }
            for (Element x = a + 3 * d + 1; x <= exhaustive_max; ++x) {
                check_schur(r, L2(a, x, d), triple_label("L2", a, x, d));
            }
        }
    }
    if (random_count > 0 && random_max < 8) throw std::invalid_argument("prop31 random_max must be at least 8");
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < random_count; ++i) {
        // L1 needs a + x + 3d <= max; L2 needs a + 3d < x <= max.
        std::uniform_int_distribution<Element> dd(1, (random_max - 2) / 3);
        const Element d = dd(rng);
        const Element a = std::uniform_int_distribution<Element>(1, random_max - 1 - 3 * d)(rng);
        if (i % 2 == 0) {
            const Element x = std::uniform_int_distribution<Element>(1, random_max - a - 3 * d)(rng);
            check_schur(r, L1(a, x, d), triple_label("L1", a, x, d));
        } else {
            const Element x = std::uniform_int_distribution<Element>(a + 3 * d + 1, random_max)(rng);
            check_schur(r, L2(a, x, d), triple_label("L2", a, x, d));
        }
    }
    return r;
}

VerifyReport verify_stability(Element n_min, Element n_max) {
    if (n_min < 1 || n_min > n_max) throw std::invalid_argument("stability suite needs 1 <= n_min <= n_max");
    VerifyReport r;
    r.suite = "stability";
    for (Element n = n_min; n <= n_max; ++n) {
        // |S| > 2n/5 + 1  <=>  5|S| > 2n + 5
        const std::size_t min_size = (2 * n + 5) / 5 + 1;
        enumerate_large_sum_free(n, min_size, [&](const IntSet& s) {
            ++r.cases;
            bool all_odd = true;
            s.for_each([&](Element x) { all_odd = all_odd && (x % 2 == 1); });
            if (!all_odd && s.min() <= s.size()) {
                r.record("n=" + std::to_string(n) + " {" + format_compact(s) + "}");
            }
        });
    }
    return r;
}

VerifyReport verify_pair_partition(Element n_max) {
    VerifyReport r;
    r.suite = "claim48";
    for (Element n = 1; n <= n_max; ++n) {
        for (Element alpha = 1; alpha <= n; ++alpha) {
            ++r.cases;
            const PairPartition part = pair_partition(n, alpha);
            const std::string label = "(n=" + std::to_string(n) + ", alpha=" + std::to_string(alpha) + ")";
            IntSet seen(std::max<Element>(part.eta, 1));
            bool disjoint = true, hosts = true;
            for (const auto& [u, v] : part.pairs) {
                if (u == 0 || v > part.eta || seen.contains(u) || seen.contains(v) || u == v) disjoint = false;
                if (u >= 1 && u <= seen.ground()) seen.insert(u);
                if (v >= 1 && v <= seen.ground()) seen.insert(v);
                const std::array<Element, 3> e{u, v, alpha};
                hosts = hosts && hosts_schur_triple(e);
            }
            if (!disjoint) r.record(label + " pairs overlap or leave [eta]");
            if (!hosts) r.record(label + " a pair fails to host a triple with alpha");
            if (!(seen == part.Q)) r.record(label + " Q differs from the union of pairs");
            if (part.Q.contains(alpha)) r.record(label + " Q contains alpha");
            if (part.Q.size() + 3 < part.eta) r.record(label + " |Q| < eta - 3");
            if (2 * part.eta < n) r.record(label + " eta < n/2");
            if (part.eta >= 60 && 20 * part.Q.size() < 19 * static_cast<std::size_t>(part.eta)) {
                r.record(label + " |Q| < 19 eta / 20");
            }
        }
    }
    return r;
}

double wicket_extension_bound(std::size_t u_size, Element n) {
    const long l = u_size >= 8 ? 0 : (8 - static_cast<long>(u_size) + 1) / 2;
    return std::pow(362880.0, static_cast<double>(l + 1)) * std::pow(static_cast<double>(n), static_cast<double>(l));
}

VerifyReport verify_wickets(Element n_max, Element bound_n, std::uint64_t per_size, std::uint64_t seed) {
    VerifyReport r;
    r.suite = "wickets";
    std::mt19937_64 rng(seed);
    auto random_subset = [&](Element n, double q) {
        IntSet s(n);
        std::bernoulli_distribution coin(q);
        for (Element x = 1; x <= n; ++x) {
            if (coin(rng)) s.insert(x);
        }
        return s;
    };
    for (Element n = 1; n <= n_max; ++n) {
        ++r.cases;
        const IntSet full = IntSet::full(n);
        const auto e = count_wickets(full, std::nullopt, WicketMethod::Explicit);
        const auto ie = count_wickets(full, std::nullopt, WicketMethod::InclusionExclusion);
        if (e != ie) r.record("[" + std::to_string(n) + "]: explicit " + std::to_string(e) + " vs " + std::to_string(ie));
        if (n <= 9 && e != 0) r.record("[" + std::to_string(n) + "] has wickets");
        for (int k = 0; k < 2; ++k) {
            ++r.cases;
            const IntSet s = random_subset(n, 0.7);
            const IntSet chi = s & random_subset(n, 0.7);
            const auto a = count_wickets(s, chi, WicketMethod::Explicit);
            const auto b = count_wickets(s, chi, WicketMethod::InclusionExclusion);
            if (a != b) r.record("S={" + format_compact(s) + "} chi={" + format_compact(chi) + "} paths disagree");
        }
    }
    if (bound_n >= 9) {
        for (std::size_t size = 1; size <= 9; ++size) {
            for (std::uint64_t i = 0; i < per_size; ++i) {
                IntSet u(bound_n);
                while (u.size() < size) u.insert(std::uniform_int_distribution<Element>(1, bound_n)(rng));
                ++r.cases;
                const double count = static_cast<double>(count_wickets_containing(u, bound_n));
                if (count > wicket_extension_bound(size, bound_n)) {
                    r.record("U={" + format_compact(u) + "} exceeds the extension bound");
                }
            }
        }
    }
    return r;
}

VerifyReport verify_moments(Element n_max, std::uint64_t count, std::uint64_t seed) {
    if (n_max < 3) throw std::invalid_argument("moments suite needs n_max >= 3");
    VerifyReport r;
    r.suite = "moments";
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Element n = std::uniform_int_distribution<Element>(3, n_max)(rng);
        const double keep = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
        const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        std::vector<SchurTriple> family;
        std::bernoulli_distribution coin(keep);
        for (const auto& t : ordered_nondegenerate_triples(IntSet::full(n))) {
            if (coin(rng)) family.push_back(t);
        }
        ++r.cases;
        const TripleMoments m = triple_moments(family, n, p);
        if (!(m.delta_exact <= m.delta_star)) {
            r.record("n=" + std::to_string(n) + " p=" + std::to_string(p) + " delta exceeds its bound");
        }
    }
    return r;
}

}  // namespace schurlab
