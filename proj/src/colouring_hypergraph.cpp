#include "schurlab/colouring_hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace schurlab {

std::vector<Element> pair_targets(Element u, Element v, const IntSet& base) {
    if (u > v) std::swap(u, v);
    std::vector<Element> out;
    if (u == v || u == 0) return out;
    // v - u is a target unless v = 2u, where {u, u, 2u} would be degenerate
    if (v != 2 * u && base.contains(v - u)) out.push_back(v - u);
    const std::uint64_t sum = static_cast<std::uint64_t>(u) + v;
    if (sum <= base.ground() && base.contains(static_cast<Element>(sum))) out.push_back(static_cast<Element>(sum));
    return out;
}

namespace {

template <class F>
void for_each_pair_of_target(Element a, Element n, F&& f) {
    for (Element x = 1; 2 * x < a; ++x) f(ElementPair{x, a - x});
    for (Element x = 1; static_cast<std::uint64_t>(x) + a <= n; ++x) {
        if (x != a) f(ElementPair{x, x + a});
    }
}

// Number of pairs of target a that contain w.
inline std::uint32_t pairs_through(Element a, Element w, Element n) {
    if (w == a) return 0;
    std::uint32_t c = 0;
    if (w < a && a - w != w) ++c;
    if (static_cast<std::uint64_t>(w) + a <= n) ++c;
    if (w > a && w - a != a) ++c;
    return c;
}

}  // namespace

ColouringHypergraph build_HA(const IntSet& a, Element n) {
    if (a.max() > n) throw std::invalid_argument("base set exceeds [n]");
    ColouringHypergraph h;
    h.n = n;
    h.base = a.ground() == n ? a : a.regrounded(n);
    h.targets = h.base.elements();
    for (Element t : h.targets) {
        for_each_pair_of_target(t, n, [&](ElementPair p) { h.pairs.push_back(p); });
    }
    std::sort(h.pairs.begin(), h.pairs.end());
    h.pairs.erase(std::unique(h.pairs.begin(), h.pairs.end()), h.pairs.end());
    h.pair_targets.resize(h.pairs.size());
    h.pairs_of_target.resize(h.targets.size());
    for (std::uint32_t i = 0; i < h.pairs.size(); ++i) {
        const auto ts = pair_targets(h.pairs[i][0], h.pairs[i][1], h.base);
        h.pair_targets[i] = {ts[0], ts.size() > 1 ? ts[1] : 0};
        for (Element t : ts) {
            const auto k = std::lower_bound(h.targets.begin(), h.targets.end(), t) - h.targets.begin();
            h.pairs_of_target[static_cast<std::size_t>(k)].push_back(i);
        }
    }
    return h;
}

std::uint64_t ColouringHypergraph::edge_count() const {
    std::uint64_t total = 0;
    for (const auto& list : pairs_of_target) total += static_cast<std::uint64_t>(list.size()) * list.size();
    // a pair with two targets meets itself through both
    for (const auto& t : pair_targets) total -= t[1] != 0 ? 1 : 0;
    return total;
}

std::vector<HAEdge> ColouringHypergraph::edges(std::uint64_t max_edges) const {
    if (edge_count() > max_edges) {
        throw LimitExceeded("colouring hypergraph has " + std::to_string(edge_count()) +
                            " edges, above the listing limit " + std::to_string(max_edges));
    }
    auto target_index = [&](Element t) {
        return static_cast<std::size_t>(std::lower_bound(targets.begin(), targets.end(), t) - targets.begin());
    };
    std::vector<HAEdge> out;
    out.reserve(edge_count());
    std::vector<std::uint32_t> partners;
    for (std::uint32_t i = 0; i < pairs.size(); ++i) {
        partners.clear();
        for (Element t : pair_targets[i]) {
            if (t == 0) continue;
            const auto& list = pairs_of_target[target_index(t)];
            partners.insert(partners.end(), list.begin(), list.end());
        }
        std::sort(partners.begin(), partners.end());
        partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
        for (std::uint32_t j : partners) {
            HAEdge e;
            e.red = pairs[i];
            e.blue = pairs[j];
            for (Element t : pair_targets[i]) {
                if (t != 0 && (pair_targets[j][0] == t || pair_targets[j][1] == t)) e.targets[e.target_count++] = t;
            }
            out.push_back(e);
        }
    }
    return out;
}

HAStats ha_stats(const ColouringHypergraph& h) {
    HAStats st;
    const Element n = h.n;
    st.edge_count = h.edge_count();
    st.vertex_count = 2ull * n;
    st.average_degree = st.vertex_count ? 4.0 * static_cast<double>(st.edge_count) / static_cast<double>(st.vertex_count) : 0;
    if (st.edge_count == 0) return st;
    st.max_quad_degree = 1;

    const std::size_t s = h.targets.size();
    std::vector<std::uint64_t> target_pairs(s);
    for (std::size_t k = 0; k < s; ++k) target_pairs[k] = h.pairs_of_target[k].size();
    auto target_index = [&](Element t) {
        return static_cast<std::size_t>(std::lower_bound(h.targets.begin(), h.targets.end(), t) - h.targets.begin());
    };

    // through[k][w]: pairs of target k containing w
    std::vector<std::vector<std::uint8_t>> through(s, std::vector<std::uint8_t>(static_cast<std::size_t>(n) + 1, 0));
    std::vector<std::uint32_t> max_through(s, 0);
    for (std::size_t k = 0; k < s; ++k) {
        for (Element w = 1; w <= n; ++w) {
            through[k][w] = static_cast<std::uint8_t>(pairs_through(h.targets[k], w, n));
            max_through[k] = std::max<std::uint32_t>(max_through[k], through[k][w]);
        }
    }

    // pairs with two targets, by element
    struct TwoTarget {
        std::uint32_t pair;
        std::size_t ka, kb;
        std::uint32_t best_w;  // max over w of pairs through w with either target
    };
    std::vector<TwoTarget> doubles;
    std::vector<std::uint32_t> doubles_through(static_cast<std::size_t>(n) + 1, 0);
    std::unordered_set<std::uint64_t> double_keys;
    std::vector<std::uint32_t> double_best(h.pairs.size(), 0);
    for (std::uint32_t i = 0; i < h.pairs.size(); ++i) {
        if (h.pair_targets[i][1] == 0) continue;
        TwoTarget d{i, target_index(h.pair_targets[i][0]), target_index(h.pair_targets[i][1]), 0};
        for (Element w = 1; w <= n; ++w) {
            const std::uint32_t c = through[d.ka][w] + through[d.kb][w] -
                                    ((w == h.pairs[i][0] || w == h.pairs[i][1]) ? 1u : 0u);
            d.best_w = std::max(d.best_w, c);
        }
        double_best[i] = d.best_w;
        ++doubles_through[h.pairs[i][0]];
        ++doubles_through[h.pairs[i][1]];
        double_keys.insert(static_cast<std::uint64_t>(h.pairs[i][0]) << 32 | h.pairs[i][1]);
        doubles.push_back(d);
    }

    // same-colour pair degree: blue pairs sharing a target with the red pair
    auto same_colour_degree = [&](std::uint32_t i) -> std::uint64_t {
        const auto& t = h.pair_targets[i];
        if (t[1] == 0) return target_pairs[target_index(t[0])];
        return target_pairs[target_index(t[0])] + target_pairs[target_index(t[1])] - 1;
    };
    auto triple_degree_as_pair = [&](std::uint32_t i) -> std::uint32_t {
        const auto& t = h.pair_targets[i];
        return t[1] == 0 ? max_through[target_index(t[0])] : double_best[i];
    };

    std::vector<std::vector<std::uint32_t>> pairs_with(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t i = 0; i < h.pairs.size(); ++i) {
        pairs_with[h.pairs[i][0]].push_back(i);
        pairs_with[h.pairs[i][1]].push_back(i);
    }

    // targets that own at least one pair
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < s; ++k) {
        if (target_pairs[k] > 0) live.push_back(k);
    }

    std::vector<std::uint64_t> mixed(static_cast<std::size_t>(n) + 1);
    for (Element x = 1; x <= n; ++x) {
        std::uint64_t d2 = 0, d3 = 0;
        for (std::uint32_t i : pairs_with[x]) {
            d2 = std::max(d2, same_colour_degree(i));
            d3 = std::max<std::uint64_t>(d3, triple_degree_as_pair(i));
        }
        // x_R together with a blue pair
        for (std::size_t k : live) d3 = std::max<std::uint64_t>(d3, through[k][x]);
        for (const auto& d : doubles) {
            const auto& p = h.pairs[d.pair];
            const std::uint64_t c = through[d.ka][x] + through[d.kb][x] - ((x == p[0] || x == p[1]) ? 1u : 0u);
            d3 = std::max(d3, c);
        }
        // x_R with w_B: sum over shared targets, minus double-target pairs counted twice
        std::fill(mixed.begin(), mixed.end(), 0);
        for (std::size_t k = 0; k < s; ++k) {
            const std::uint8_t cx = through[k][x];
            if (cx == 0) continue;
            const auto& row = through[k];
            for (Element w = 1; w <= n; ++w) mixed[w] += static_cast<std::uint64_t>(cx) * row[w];
        }
        for (Element w = 1; w <= n; ++w) {
            std::uint64_t m = mixed[w];
            if (w == x) {
                m -= doubles_through[x];
            } else if (!double_keys.empty()) {
                const Element lo = std::min(x, w), hi = std::max(x, w);
                if (double_keys.count(static_cast<std::uint64_t>(lo) << 32 | hi)) m -= 1;
            }
            d2 = std::max(d2, m);
        }
        const std::uint64_t d4 = pairs_with[x].empty() ? 0 : 1;
        st.max_pair_degree = std::max(st.max_pair_degree, d2);
        st.max_triple_degree = std::max(st.max_triple_degree, d3);
        // red and blue copies of x have equal statistics by symmetry
        st.sum_d2 += 2 * d2;
        st.sum_d3 += 2 * d3;
        st.sum_d4 += 2 * d4;
    }
    return st;
}

double codegree_delta(const HAStats& stats, Element n, double tau, CodegreeVariant variant, bool relaxed_domain) {
    if (!(tau > 0) || (!relaxed_domain && !(tau < 0.5))) {
        throw std::invalid_argument("codegree function needs tau in (0, 1/2)");
    }
    if (!(stats.average_degree > 0)) throw std::invalid_argument("codegree function needs positive average degree");
    const double N = 2.0 * n;
    const double d = stats.average_degree;
    double dj[3];
    if (variant == CodegreeVariant::MaxDegree) {
        dj[0] = static_cast<double>(stats.max_pair_degree);
        dj[1] = static_cast<double>(stats.max_triple_degree);
        dj[2] = static_cast<double>(stats.max_quad_degree);
    } else {
        dj[0] = static_cast<double>(stats.sum_d2) / N;
        dj[1] = static_cast<double>(stats.sum_d3) / N;
        dj[2] = static_cast<double>(stats.sum_d4) / N;
    }
    const double delta2 = dj[0] / (tau * d);
    const double delta3 = dj[1] / (tau * tau * d);
    const double delta4 = dj[2] / (tau * tau * tau * d);
    return 32.0 * delta2 + 16.0 * delta3 + 4.0 * delta4;
}

double codegree_upper_estimate(Element n, Element s, double tau) {
    const double nn = n, ss = s;
    return 1024.0 / (tau * ss) + 512.0 / (tau * tau * ss * nn) + 32.0 / (tau * tau * tau * ss * nn);
}

double container_log_count_bound(Element n, Element s, double c) {
    const double nn = n;
    return c * std::cbrt(1.0 / s) * std::cbrt(nn * nn) * std::log(nn);
}

ContainerLike::ContainerLike(IntSet r, IntSet b) : n(r.ground()), red(std::move(r)), blue(std::move(b)) {
    if (red.ground() != blue.ground()) throw std::invalid_argument("container sides need a common ground");
}

ContainerParts partition_by_container(const ContainerLike& c) {
    const IntSet both = c.red & c.blue;
    return {(c.red | c.blue).complement(), c.red - c.blue, c.blue - c.red, both};
}

const char* container_case_name(ContainerCase c) {
    switch (c) {
        case ContainerCase::CaseI: return "CaseI";
        case ContainerCase::CaseII: return "CaseII";
        case ContainerCase::CaseIII: return "CaseIII";
    }
    return "?";
}

ContainerCase container_case(const ContainerLike& c, double epsilon) {
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    const auto parts = partition_by_container(c);
    const double nn = c.n;
    if (static_cast<double>(parts.missing.size()) >= epsilon * nn) return ContainerCase::CaseI;
    const double limit = epsilon * nn * nn;
    if (static_cast<double>(count_ordered_triples(parts.red_only)) >= limit ||
        static_cast<double>(count_ordered_triples(parts.blue_only)) >= limit) {
        return ContainerCase::CaseII;
    }
    return ContainerCase::CaseIII;
}

const char* compatibility_name(Compatibility c) {
    switch (c) {
        case Compatibility::Compatible: return "Compatible";
        case Compatibility::Incompatible: return "Incompatible";
        case Compatibility::Unknown: return "Unknown";
    }
    return "?";
}

CompatibilityOutcome is_compatible(const IntSet& a, const IntSet& p, const ContainerLike& c, std::uint64_t budget) {
    const IntSet s = a | p;
    if (s.ground() != c.n) throw std::invalid_argument("container and sets need a common ground");
    CompatibilityOutcome out;
    if (s.intersects((c.red | c.blue).complement())) {
        out.status = Compatibility::Incompatible;
        return out;
    }
    ColourConstraint constraint;
    s.for_each([&](Element x) {
        const std::uint8_t m = static_cast<std::uint8_t>((c.red.contains(x) ? kAllowRed : 0) |
                                                         (c.blue.contains(x) ? kAllowBlue : 0));
        if (m != kAllowBoth) constraint.restrict(x, m);
    });
    const SolveOutcome r = find_schur_colouring(s, constraint, budget);
    out.nodes_explored = r.nodes_explored;
    switch (r.status) {
        case SolveStatus::Colourable:
            out.status = Compatibility::Compatible;
            out.witness = r.witness;
            break;
        case SolveStatus::NotColourable: out.status = Compatibility::Incompatible; break;
        case SolveStatus::BudgetExceeded: out.status = Compatibility::Unknown; break;
    }
    return out;
}

DensityCheck pair_density_witness(const ContainerLike& c, double epsilon) {
    const auto parts = partition_by_container(c);
    const Element n = c.n;
    const double nn = n;
    DensityCheck out;
    out.hypotheses_hold = static_cast<double>(parts.missing.size()) < epsilon * nn &&
                          static_cast<double>(count_ordered_triples(parts.red_only)) < epsilon * nn * nn &&
                          static_cast<double>(count_ordered_triples(parts.blue_only)) < epsilon * nn * nn;
    const Element lowest = (n + 1) / 2;
    for (Element eta = n; eta >= lowest && eta >= 1; --eta) {
        const std::size_t r = parts.red_only.count_in(1, eta);
        if (20 * r >= 9ull * eta) {
            out.witness = DensityWitness{eta, DenseSide::R, r};
            return out;
        }
        const std::size_t b = parts.blue_only.count_in(1, eta);
        if (20 * b >= 9ull * eta) {
            out.witness = DensityWitness{eta, DenseSide::B, b};
            return out;
        }
    }
    return out;
}

}  // namespace schurlab
