#include "schurlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schurlab {

double janson_lower_tail(const JansonParams& p) {
    if (!(p.mu >= 0) || !(p.delta >= 0) || !(p.t >= 0)) {
        throw std::invalid_argument("Janson parameters must be nonnegative");
    }
    if (p.t > p.mu) throw std::invalid_argument("Janson deviation t exceeds mu");
    const double denom = 2.0 * (p.mu + p.delta);
    if (denom == 0) return 1.0;
    return std::exp(-(p.t * p.t) / denom);
}

double triple_delta_star(Element n, double p) {
    const double nn = n;
    return 27.0 * (nn * nn * std::pow(p, 4) + nn * nn * nn * std::pow(p, 5));
}

std::vector<SchurTriple> ordered_nondegenerate_triples(const IntSet& s) {
    std::vector<SchurTriple> out;
    for (const auto& h : hosting_sets(s)) {
        if (h.count != 3) continue;
        const Element a = h.elems[0], b = h.elems[1], c = h.elems[2];
        out.push_back({a, b, c});
        out.push_back({b, a, c});
    }
    std::sort(out.begin(), out.end());
    return out;
}

TripleMoments triple_moments(const std::vector<SchurTriple>& triples, Element n, double p) {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
    std::vector<HostingSet> sets;
    {
        std::vector<HostingSet> seen;
        for (const auto& t : triples) {
            if (t.x + t.y != t.z) throw std::invalid_argument("not a Schur triple");
            if (t.degenerate()) throw std::invalid_argument("degenerate triple in moment computation");
            if (t.x < 1 || t.y < 1 || t.z > n) throw std::invalid_argument("triple outside [1, n]");
            sets.push_back(t.hosting_set());
        }
        // keep first occurrence of each hosting set
        std::vector<std::size_t> order(sets.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sets[a] < sets[b]; });
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k == 0 || sets[order[k]] != sets[order[k - 1]]) seen.push_back(sets[order[k]]);
        }
        sets = std::move(seen);
    }

    TripleMoments m;
    m.distinct_triples = sets.size();
    m.mu_exact = static_cast<double>(sets.size()) * p * p * p;
    m.delta_star = triple_delta_star(n, p);

    // ordered pairs of distinct intersecting sets, grouped by union size
    std::vector<std::vector<std::uint32_t>> by_element(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t i = 0; i < sets.size(); ++i) {
        for (Element x : sets[i].view()) by_element[x].push_back(i);
    }
    std::uint64_t shared_two = 0, shared_one = 0;
    std::vector<std::uint32_t> stamp(sets.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < sets.size(); ++i) {
        for (Element x : sets[i].view()) {
            for (std::uint32_t j : by_element[x]) {
                if (j == i || stamp[j] == i) continue;
                stamp[j] = i;
                std::size_t common = 0;
                for (Element y : sets[j].view()) common += sets[i].contains(y) ? 1 : 0;
                (common == 2 ? shared_two : shared_one) += 1;
            }
        }
    }
    m.delta_exact = static_cast<double>(shared_two) * std::pow(p, 4) + static_cast<double>(shared_one) * std::pow(p, 5);
    return m;
}

WicketDeltaBound wicket_delta_bound(double wicket_count, Element n, double p, double C) {
    if (!(C > 0)) throw std::invalid_argument("C must be positive");
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
    if (!(wicket_count >= 0)) throw std::invalid_argument("wicket count must be nonnegative");
    const double nn = n;
    if (p > C / std::sqrt(nn)) throw std::invalid_argument("wicket bound needs p <= C n^{-1/2}");

    const double f = 362880.0;  // 9!
    const double f2 = f * f, f3 = f2 * f, f4 = f3 * f, f5 = f4 * f;
    const double bracket = f5 * std::pow(nn, 4) * std::pow(p, 8) + f4 * std::pow(nn, 3) * std::pow(p, 7) +
                           f4 * std::pow(nn, 3) * std::pow(p, 6) + f3 * nn * nn * std::pow(p, 5) +
                           f3 * nn * nn * std::pow(p, 4) + f2 * nn * std::pow(p, 3) + f2 * nn * p * p + f * p + f;
    const double lead = wicket_count * std::pow(p, 9);
    WicketDeltaBound b;
    b.termwise = lead * 512.0 * bracket;
    b.collected = lead * std::ldexp(1.0, 104) *
                  (std::pow(nn, 4) * std::pow(p, 8) + std::pow(nn, 3) * std::pow(p, 6) + nn * nn * std::pow(p, 4) +
                   nn * p * p + 1.0);
    b.simplified = lead * std::ldexp(1.0, 108) * std::pow(C, 4);
    b.simplified_dominates = b.termwise <= b.simplified;
    return b;
}

const char* dense_case_name(DenseCase c) {
    switch (c) {
        case DenseCase::CaseI: return "CaseI";
        case DenseCase::CaseII1: return "CaseII1";
        case DenseCase::CaseII2: return "CaseII2";
        case DenseCase::Unclassified: return "Unclassified";
    }
    return "?";
}

DenseCaseReport classify_dense_case(const IntSet& a, double delta, double epsilon) {
    if (!(delta > 0 && delta < 1) || !(epsilon > 0 && epsilon < 1)) {
        throw std::invalid_argument("classifier needs delta and epsilon in (0, 1)");
    }
    DenseCaseReport r;
    const Element n = a.ground();
    r.n = n;
    r.delta = delta;
    r.epsilon = epsilon;
    r.triple_sets = count_hosting_sets(a);
    a.for_each([&](Element x) {
        if (x % 2 == 0) ++r.even_count;
    });
    for (Element x = 1; x <= n; x += 2) {
        if (!a.contains(x)) ++r.missing_odds;
    }
    const Element half_up = (n + 1) / 2;
    r.missing_top = (n - half_up + 1) - a.count_in(half_up, n);
    r.t = static_cast<std::int64_t>(a.size()) - static_cast<std::int64_t>(half_up);

    const double nn = n;
    if (static_cast<double>(r.triple_sets) >= delta * nn * nn) {
        r.label = DenseCase::CaseI;
    } else if (static_cast<double>(r.even_count) <= epsilon * nn && static_cast<double>(r.missing_odds) <= epsilon * nn) {
        r.label = DenseCase::CaseII1;
    } else if (static_cast<double>(r.missing_top) <= 2 * epsilon * nn) {
        r.label = DenseCase::CaseII2;
    } else {
        r.label = DenseCase::Unclassified;
    }
    return r;
}

}  // namespace schurlab
