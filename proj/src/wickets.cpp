#include "schurlab/wickets.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace schurlab {

bool is_wicket(const WicketTuple& w, Element n) {
    for (Element v : w) {
        if (v < 1 || v > n) return false;
    }
    WicketTuple sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int i = 0; i < 3; ++i) {
        if (w[3 * i] + w[3 * i + 1] != w[3 * i + 2]) return false;
    }
    return w[0] + w[3] == w[6];
}

namespace {

using Small = std::vector<Element>;

bool in_small(const Small& z, Element e) { return std::find(z.begin(), z.end(), e) != z.end(); }

// The three legs (y, y + x_i) available once (x1, x2, x3) is fixed. A leg is
// identified by its y value; y and z must lie in `allowed` and avoid the x's.
class Legs {
public:
    Legs(const IntSet& allowed, Element x1, Element x2) : allowed_(allowed), x_{x1, x2, x1 + x2} {
        for (int i = 0; i < 3; ++i) {
            allowed_.for_each([&](Element y) {
                if (ok(i, y)) ys_[i].push_back(y);
            });
        }
    }

    Element x(int i) const { return x_[i]; }
    const std::vector<Element>& ys(int i) const { return ys_[i]; }

    bool ok(int i, Element y) const {
        const std::uint64_t z = static_cast<std::uint64_t>(y) + x_[i];
        return y >= 1 && z <= allowed_.ground() && allowed_.contains(y) &&
               allowed_.contains(static_cast<Element>(z)) && !is_x(y) && !is_x(static_cast<Element>(z));
    }

    bool avoids(int i, Element y, const Small& z) const { return !in_small(z, y) && !in_small(z, y + x_[i]); }

    // y values of legs in L_i that contain e (at most two).
    void containing(int i, Element e, Small& out) const {
        if (ok(i, e)) out.push_back(e);
        if (e > x_[i] && ok(i, e - x_[i])) out.push_back(e - x_[i]);
    }

    // Legs of L_j meeting leg (i, y), deduplicated.
    Small meeting(int i, Element y, int j) const {
        Small out;
        containing(j, y, out);
        containing(j, y + x_[i], out);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Legs of L_i hitting z, deduplicated.
    Small hitting(int i, const Small& z) const {
        Small out;
        for (Element e : z) containing(i, e, out);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::int64_t avoiding_count(int i, const Small& z) const {
        return static_cast<std::int64_t>(ys_[i].size()) - static_cast<std::int64_t>(hitting(i, z).size());
    }

    // Intersecting (l_i, l_j) pairs with both legs avoiding z.
    std::int64_t intersecting(int i, int j, const Small& z) {
        const int key = i * 3 + j;
        if (!base_cached_[key]) {
            std::int64_t total = 0;
            for (Element y : ys_[i]) total += static_cast<std::int64_t>(meeting(i, y, j).size());
            base_[key] = total;
            base_cached_[key] = true;
        }
        if (z.empty()) return base_[key];
        std::vector<std::pair<Element, Element>> removed;
        for (Element yi : hitting(i, z)) {
            for (Element yj : meeting(i, yi, j)) removed.emplace_back(yi, yj);
        }
        for (Element yj : hitting(j, z)) {
            for (Element yi : meeting(j, yj, i)) removed.emplace_back(yi, yj);
        }
        std::sort(removed.begin(), removed.end());
        removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
        return base_[key] - static_cast<std::int64_t>(removed.size());
    }

    std::int64_t disjoint_pairs(int i, int j, const Small& z) {
        return avoiding_count(i, z) * avoiding_count(j, z) - intersecting(i, j, z);
    }

    std::int64_t triples_ie(const Small& z) {
        std::int64_t total = 0;
        Small zz = z;
        for (Element y : ys_[0]) {
            if (!avoids(0, y, z)) continue;
            zz.resize(z.size());
            zz.push_back(y);
            zz.push_back(y + x_[0]);
            total += disjoint_pairs(1, 2, zz);
        }
        return total;
    }

    std::int64_t triples_explicit(const Small& z) const {
        std::int64_t total = 0;
        Small zz = z;
        for (Element y1 : ys_[0]) {
            if (!avoids(0, y1, z)) continue;
            for (Element y2 : ys_[1]) {
                if (!avoids(1, y2, z)) continue;
                if (y2 == y1 || y2 == y1 + x_[0] || y2 + x_[1] == y1 || y2 + x_[1] == y1 + x_[0]) continue;
                zz.resize(z.size());
                zz.insert(zz.end(), {y1, y1 + x_[0], y2, y2 + x_[1]});
                total += avoiding_count(2, zz);
            }
        }
        return total;
    }

    // Completions over the free leg indices given forbidden elements z.
    std::int64_t free_count(const std::vector<int>& free, const Small& z) {
        switch (free.size()) {
            case 0: return 1;
            case 1: return avoiding_count(free[0], z);
            case 2: return disjoint_pairs(free[0], free[1], z);
            default: return triples_ie(z);
        }
    }

private:
    bool is_x(Element e) const { return e == x_[0] || e == x_[1] || e == x_[2]; }

    const IntSet& allowed_;
    std::array<Element, 3> x_;
    std::array<std::vector<Element>, 3> ys_;
    std::array<std::int64_t, 9> base_{};
    std::array<bool, 9> base_cached_{};
};

void require_same_ground(const IntSet& s, const std::optional<IntSet>& chi) {
    if (chi && chi->ground() != s.ground()) {
        throw std::invalid_argument("wicket counting needs s and chi over the same ground");
    }
}

template <class F>
void for_each_base_pair(const IntSet& s, const std::vector<Element>& x1s, F&& f) {
    for (Element x1 : x1s) {
        s.for_each([&](Element x2) {
            const std::uint64_t x3 = static_cast<std::uint64_t>(x1) + x2;
            if (x2 == x1 || x3 > s.ground() || !s.contains(static_cast<Element>(x3))) return;
            f(x1, x2);
        });
    }
}

}  // namespace

std::uint64_t count_wickets(const IntSet& s, const std::optional<IntSet>& chi, WicketMethod method,
                            unsigned workers) {
    require_same_ground(s, chi);
    const IntSet& allowed = chi ? *chi : s;
    if (method == WicketMethod::Auto) {
        method = s.ground() <= kExplicitWicketLimit ? WicketMethod::Explicit : WicketMethod::InclusionExclusion;
    }
    const auto members = s.elements();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(members.size(), 1))));
    std::vector<std::uint64_t> partial(workers, 0);
    auto job = [&](unsigned k) {
        std::vector<Element> mine;
        for (std::size_t i = k; i < members.size(); i += workers) mine.push_back(members[i]);
        std::uint64_t total = 0;
        const Small none;
        for_each_base_pair(s, mine, [&](Element x1, Element x2) {
            Legs legs(allowed, x1, x2);
            const std::int64_t c =
                method == WicketMethod::Explicit ? legs.triples_explicit(none) : legs.triples_ie(none);
            total += static_cast<std::uint64_t>(c);
        });
        partial[k] = total;
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < workers; ++k) pool.emplace_back(job, k);
        for (auto& t : pool) t.join();
    }
    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

namespace {

struct CoverSearch {
    Legs& legs;
    const Small& targets;  // members of u not among the x's
    std::array<std::optional<Element>, 3> chosen{};
    Small used;

    std::int64_t run() {
        Element pending = 0;
        for (Element u : targets) {
            if (!in_small(used, u)) {
                pending = u;
                break;
            }
        }
        if (pending == 0) {
            std::vector<int> free;
            for (int i = 0; i < 3; ++i) {
                if (!chosen[i]) free.push_back(i);
            }
            return legs.free_count(free, used);
        }
        std::int64_t total = 0;
        for (int i = 0; i < 3; ++i) {
            if (chosen[i]) continue;
            Small ys;
            legs.containing(i, pending, ys);
            for (Element y : ys) {
                if (!legs.avoids(i, y, used)) continue;
                chosen[i] = y;
                used.push_back(y);
                used.push_back(y + legs.x(i));
                total += run();
                used.resize(used.size() - 2);
                chosen[i].reset();
            }
        }
        return total;
    }
};

}  // namespace

std::uint64_t count_wickets_containing(const IntSet& u, Element n) {
    if (u.max() > n) return 0;
    if (u.size() > 9) return 0;
    const IntSet all = IntSet::full(n);
    const auto wanted = u.elements();
    std::uint64_t total = 0;
    for (Element x1 = 1; x1 <= n; ++x1) {
        for (Element x2 = 1; x1 + x2 <= n; ++x2) {
            if (x1 == x2) continue;
            const Element x3 = x1 + x2;
            Small rest;
            for (Element e : wanted) {
                if (e != x1 && e != x2 && e != x3) rest.push_back(e);
            }
            if (rest.size() > 6) continue;
            Legs legs(all, x1, x2);
            CoverSearch search{legs, rest, {}, {}};
            total += static_cast<std::uint64_t>(search.run());
        }
    }
    return total;
}

namespace {

template <class F>
void for_each_wicket(const IntSet& s, const IntSet& allowed, F&& f) {
    const auto members = s.elements();
    for_each_base_pair(s, members, [&](Element x1, Element x2) {
        Legs legs(allowed, x1, x2);
        const Element x3 = x1 + x2;
        for (Element y1 : legs.ys(0)) {
            for (Element y2 : legs.ys(1)) {
                const Small z{y1, y1 + x1};
                if (!legs.avoids(1, y2, z)) continue;
                const Small zz{y1, y1 + x1, y2, y2 + x2};
                for (Element y3 : legs.ys(2)) {
                    if (!legs.avoids(2, y3, zz)) continue;
                    if (f(WicketTuple{x1, y1, y1 + x1, x2, y2, y2 + x2, x3, y3, y3 + x3})) return;
                }
            }
        }
    });
}

}  // namespace

std::uint64_t count_wicket_sets(const IntSet& s, const std::optional<IntSet>& chi) {
    require_same_ground(s, chi);
    if (s.ground() > kWicketSetLimit) {
        throw LimitExceeded("wicket set enumeration is limited to n <= " + std::to_string(kWicketSetLimit));
    }
    std::vector<WicketTuple> sets;
    for_each_wicket(s, chi ? *chi : s, [&](WicketTuple w) {
        std::sort(w.begin(), w.end());
        sets.push_back(w);
        return false;
    });
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets.size();
}

std::optional<WicketTuple> first_wicket(const IntSet& s, const std::optional<IntSet>& chi) {
    require_same_ground(s, chi);
    const IntSet& allowed = chi ? *chi : s;
    // lexicographic: x1, then y1, then x2, then y2, then y3
    for (Element x1 : s.elements()) {
        std::vector<Element> y1s;
        allowed.for_each([&](Element y) {
            if (static_cast<std::uint64_t>(y) + x1 <= allowed.ground() && allowed.contains(y + x1)) y1s.push_back(y);
        });
        for (Element y1 : y1s) {
            for (Element x2 : s.elements()) {
                const std::uint64_t x3 = static_cast<std::uint64_t>(x1) + x2;
                if (x2 == x1 || x3 > s.ground() || !s.contains(static_cast<Element>(x3))) continue;
                Legs legs(allowed, x1, x2);
                if (!legs.ok(0, y1)) continue;
                const Small z{y1, y1 + x1};
                for (Element y2 : legs.ys(1)) {
                    if (!legs.avoids(1, y2, z)) continue;
                    const Small zz{y1, y1 + x1, y2, y2 + x2};
                    for (Element y3 : legs.ys(2)) {
                        if (legs.avoids(2, y3, zz)) {
                            return WicketTuple{x1, y1, y1 + x1, x2, y2, y2 + x2, static_cast<Element>(x3), y3,
                                               static_cast<Element>(y3 + x3)};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace schurlab
