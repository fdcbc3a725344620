#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace oracle {

std::vector<std::vector<Element>> hosting_sets(const IntSet& s) {
    std::set<std::vector<Element>> out;
    const auto m = s.elements();
    for (Element x : m) {
        for (Element y : m) {
            if (y < x) continue;
            for (Element z : m) {
                if (x + y != z) continue;
                std::vector<Element> h{x, y, z};
                std::sort(h.begin(), h.end());
                h.erase(std::unique(h.begin(), h.end()), h.end());
                out.insert(h);
            }
        }
    }
    return {out.begin(), out.end()};
}

bool colourable(const std::vector<Element>& vertices, const std::vector<std::vector<Element>>& edges,
                const std::vector<std::uint8_t>& masks) {
    const std::size_t k = vertices.size();
    std::vector<std::uint64_t> edge_bits;
    for (const auto& e : edges) {
        std::uint64_t b = 0;
        for (Element x : e) {
            const auto it = std::find(vertices.begin(), vertices.end(), x);
            b |= std::uint64_t{1} << (it - vertices.begin());
        }
        edge_bits.push_back(b);
    }
    std::uint64_t must_red = 0, must_blue = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (masks[i] == 0) return false;
        if (masks[i] == 1) must_red |= std::uint64_t{1} << i;
        if (masks[i] == 2) must_blue |= std::uint64_t{1} << i;
    }
    // bit set = red
    for (std::uint64_t red = 0; red < (std::uint64_t{1} << k); ++red) {
        if ((red & must_red) != must_red || (red & must_blue) != 0) continue;
        bool ok = true;
        for (std::uint64_t b : edge_bits) {
            if ((red & b) == b || (red & b) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

bool is_schur(const IntSet& s) {
    const auto m = s.elements();
    if (m.empty()) return false;
    std::vector<std::uint8_t> masks(m.size(), 3);
    masks[0] = 1;  // colour symmetry
    return !colourable(m, oracle::hosting_sets(s), masks);
}

namespace {

template <class F>
void for_each_wicket(const IntSet& s, const std::optional<IntSet>& chi, F&& f) {
    const Element n = s.ground();
    auto in_s = [&](std::uint64_t v) { return v >= 1 && v <= n && s.contains(static_cast<Element>(v)); };
    auto in_chi = [&](std::uint64_t v) { return in_s(v) && (!chi || chi->contains(static_cast<Element>(v))); };
    for (Element x1 = 1; x1 <= n; ++x1) {
        if (!in_s(x1)) continue;
        for (Element y1 = 1; y1 <= n; ++y1) {
            if (!in_chi(y1) || !in_chi(x1 + y1)) continue;
            for (Element x2 = 1; x2 <= n; ++x2) {
                if (!in_s(x2) || !in_s(std::uint64_t{x1} + x2)) continue;
                for (Element y2 = 1; y2 <= n; ++y2) {
                    if (!in_chi(y2) || !in_chi(std::uint64_t{x2} + y2)) continue;
                    const Element x3 = x1 + x2;
                    for (Element y3 = 1; y3 <= n; ++y3) {
                        if (!in_chi(y3) || !in_chi(std::uint64_t{x3} + y3)) continue;
                        std::array<Element, 9> w{x1, y1, x1 + y1, x2, y2, x2 + y2, x3, y3, x3 + y3};
                        auto sorted = w;
                        std::sort(sorted.begin(), sorted.end());
                        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
                        f(w);
                    }
                }
            }
        }
    }
}

}  // namespace

std::uint64_t count_wickets(const IntSet& s, const std::optional<IntSet>& chi) {
    std::uint64_t c = 0;
    for_each_wicket(s, chi, [&](const std::array<Element, 9>&) { ++c; });
    return c;
}

std::uint64_t count_wickets_containing(const IntSet& u, Element n) {
    if (u.max() > n) return 0;
    const auto want = u.elements();
    std::uint64_t c = 0;
    for_each_wicket(IntSet::full(n), std::nullopt, [&](const std::array<Element, 9>& w) {
        for (Element x : want) {
            if (std::find(w.begin(), w.end(), x) == w.end()) return;
        }
        ++c;
    });
    return c;
}

std::vector<IntSet> sum_free_sets(Element n, std::size_t min_size) {
    std::vector<IntSet> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) < min_size) continue;
        IntSet s(n);
        for (Element x = 1; x <= n; ++x) {
            if (mask >> (x - 1) & 1u) s.insert(x);
        }
        if (oracle::hosting_sets(s).empty()) out.push_back(s);
    }
    return out;
}

std::uint64_t count_4aps(const IntSet& s) {
    std::uint64_t c = 0;
    const Element n = s.ground();
    for (Element a = 1; a <= n; ++a) {
        for (Element d = 1; a + 3 * d <= n; ++d) {
            if (s.contains(a) && s.contains(a + d) && s.contains(a + 2 * d) && s.contains(a + 3 * d)) ++c;
        }
    }
    return c;
}

double triple_delta(const std::vector<std::array<Element, 3>>& sets, double p) {
    double delta = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i == j) continue;
            int common = 0;
            for (Element x : sets[i]) common += std::count(sets[j].begin(), sets[j].end(), x) ? 1 : 0;
            if (common == 0) continue;
            delta += std::pow(p, 6 - common);
        }
    }
    return delta;
}

HAEdgeSet ha_edges(const IntSet& a, Element n) {
    auto hosts = [](Element t, Element x, Element y) {
        if (t == x || t == y || x == y) return false;
        return t + x == y || t + y == x || x + y == t;
    };
    std::set<std::array<Element, 4>> edges;
    a.for_each([&](Element t) {
        std::vector<std::array<Element, 2>> pairs;
        for (Element x = 1; x <= n; ++x) {
            for (Element y = x + 1; y <= n; ++y) {
                if (hosts(t, x, y)) pairs.push_back({x, y});
            }
        }
        for (const auto& r : pairs) {
            for (const auto& b : pairs) edges.insert({r[0], r[1], b[0], b[1]});
        }
    });
    return {std::vector<std::array<Element, 4>>(edges.begin(), edges.end())};
}

HADegrees ha_degrees(const HAEdgeSet& h, Element n) {
    std::map<std::vector<Element>, std::uint64_t> deg[5];
    for (const auto& e : h.edges) {
        const std::array<Element, 4> v{e[0], e[1], n + e[2], n + e[3]};
        for (unsigned sub = 1; sub < 16; ++sub) {
            std::vector<Element> sigma;
            for (int i = 0; i < 4; ++i) {
                if (sub >> i & 1u) sigma.push_back(v[i]);
            }
            std::sort(sigma.begin(), sigma.end());
            ++deg[sigma.size()][sigma];
        }
    }
    HADegrees out;
    std::uint64_t* maxes[5] = {nullptr, nullptr, &out.max2, &out.max3, &out.max4};
    std::uint64_t* sums[5] = {nullptr, nullptr, &out.sum2, &out.sum3, &out.sum4};
    for (int j = 2; j <= 4; ++j) {
        std::vector<std::uint64_t> dv(2 * static_cast<std::size_t>(n) + 1, 0);
        for (const auto& [sigma, d] : deg[j]) {
            *maxes[j] = std::max(*maxes[j], d);
            for (Element x : sigma) dv[x] = std::max(dv[x], d);
        }
        for (auto d : dv) *sums[j] += d;
    }
    return out;
}

IntSet random_subset(std::mt19937_64& rng, Element n, double q) {
    IntSet s(n);
    std::bernoulli_distribution coin(q);
    for (Element x = 1; x <= n; ++x) {
        if (coin(rng)) s.insert(x);
    }
    return s;
}

}  // namespace oracle
