#include "schurlab/solver.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace schurlab {

const char* colour_name(Colour c) { return c == Colour::Red ? "red" : "blue"; }

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Colourable: return "colourable";
        case SolveStatus::NotColourable: return "not_colourable";
        case SolveStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

const char* verdict_name(SchurVerdict v) {
    switch (v) {
        case SchurVerdict::Schur: return "Schur";
        case SchurVerdict::NotSchur: return "NotSchur";
        case SchurVerdict::Unknown: return "Unknown";
    }
    return "?";
}

const char* edge_type_name(EdgeType t) {
    switch (t) {
        case EdgeType::T1: return "t1";
        case EdgeType::T2: return "t2";
        case EdgeType::Other: return "other";
    }
    return "?";
}

void Colouring::assign(Element x, Colour c) {
    if (c == Colour::Red) {
        blue.erase(x);
        red.insert(x);
    } else {
        red.erase(x);
        blue.insert(x);
    }
}

std::optional<Colour> Colouring::colour_of(Element x) const {
    if (red.contains(x)) return Colour::Red;
    if (blue.contains(x)) return Colour::Blue;
    return std::nullopt;
}

bool Colouring::covers(const IntSet& s) const {
    bool ok = true;
    s.for_each([&](Element x) {
        if (ok && !red.contains(x) && !blue.contains(x)) ok = false;
    });
    return ok;
}

std::uint8_t ColourConstraint::mask(Element x) const {
    auto it = allowed.find(x);
    return it == allowed.end() ? kAllowBoth : it->second;
}

void ColourConstraint::restrict(Element x, std::uint8_t m) {
    auto [it, inserted] = allowed.emplace(x, m & kAllowBoth);
    if (!inserted) it->second &= m;
}

void ColourConstraint::force(const IntSet& s, Colour c) {
    s.for_each([&](Element x) { restrict(x, colour_bit(c)); });
}

ColourConstraint ColourConstraint::blue_only(const IntSet& s) {
    ColourConstraint out;
    out.force(s, Colour::Blue);
    return out;
}

HostingHypergraph build_schur_hypergraph(const IntSet& s) { return {s, hosting_sets(s)}; }

namespace {

// Propagating backtracking search over local vertex indices.
class Search {
public:
    Search(const HostingHypergraph& h, const ColourConstraint& constraint, std::uint64_t budget)
        : budget_(budget) {
        verts_ = h.vertices.elements();
        allowed_.resize(verts_.size());
        for (std::size_t i = 0; i < verts_.size(); ++i) allowed_[i] = constraint.mask(verts_[i]);
        edges_.reserve(h.edges.size());
        std::vector<std::uint32_t> degree(verts_.size(), 0);
        for (const auto& e : h.edges) {
            if (e.count < 2) throw std::invalid_argument("hypergraph edge with fewer than two vertices");
            std::array<std::int32_t, 3> local{-1, -1, -1};
            for (std::uint8_t k = 0; k < e.count; ++k) {
                auto it = std::lower_bound(verts_.begin(), verts_.end(), e.elems[k]);
                if (it == verts_.end() || *it != e.elems[k]) {
                    throw std::invalid_argument("edge vertex " + std::to_string(e.elems[k]) +
                                                " missing from vertex set");
                }
                local[k] = static_cast<std::int32_t>(it - verts_.begin());
                ++degree[static_cast<std::size_t>(local[k])];
            }
            edges_.push_back({local, e.count});
        }
        offsets_.assign(verts_.size() + 1, 0);
        for (std::size_t i = 0; i < verts_.size(); ++i) offsets_[i + 1] = offsets_[i] + degree[i];
        incidence_.resize(offsets_.back());
        std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (std::uint32_t e = 0; e < edges_.size(); ++e) {
            for (std::uint8_t k = 0; k < edges_[e].size; ++k) {
                incidence_[fill[static_cast<std::size_t>(edges_[e].v[k])]++] = e;
            }
        }
        colour_.assign(verts_.size(), kNone);
        counts_.assign(edges_.size(), {0, 0});
    }

    SolveOutcome run(Element ground) {
        SolveOutcome out;
        for (auto m : allowed_) {
            if (m == 0) {
                out.status = SolveStatus::NotColourable;
                return out;
            }
        }
        if (edges_.empty()) {
            out.status = SolveStatus::Colourable;
            out.witness = make_witness(ground);
            return out;
        }
        out.status = dfs(true);
        out.nodes_explored = nodes_;
        if (out.status == SolveStatus::Colourable) out.witness = make_witness(ground);
        return out;
    }

private:
    static constexpr std::int8_t kNone = -1;

    struct LocalEdge {
        std::array<std::int32_t, 3> v;
        std::uint8_t size;
    };

    bool propagate(std::size_t v, std::int8_t c) {
        queue_.clear();
        queue_.emplace_back(v, c);
        bool ok = true;
        for (std::size_t head = 0; ok && head < queue_.size(); ++head) {
            const auto [u, cu] = queue_[head];
            if (colour_[u] == cu) continue;
            if (colour_[u] != kNone || !(allowed_[u] & (1u << cu))) return false;
            colour_[u] = cu;
            trail_.push_back(u);
            // finish every counter update before reporting a conflict so undo stays exact
            for (std::uint32_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
                const std::uint32_t e = incidence_[i];
                auto& cnt = counts_[e];
                const std::uint8_t mine = ++cnt[static_cast<std::size_t>(cu)];
                const std::uint8_t other = cnt[static_cast<std::size_t>(1 - cu)];
                if (!ok || other != 0) continue;
                const std::uint8_t size = edges_[e].size;
                if (mine == size) {
                    ok = false;
                } else if (mine + 1 == size) {
                    for (std::uint8_t k = 0; k < size; ++k) {
                        const auto w = static_cast<std::size_t>(edges_[e].v[k]);
                        if (colour_[w] == kNone) {
                            queue_.emplace_back(w, static_cast<std::int8_t>(1 - cu));
                            break;
                        }
                    }
                }
            }
        }
        return ok;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const std::size_t u = trail_.back();
            trail_.pop_back();
            const auto cu = static_cast<std::size_t>(colour_[u]);
            for (std::uint32_t i = offsets_[u]; i < offsets_[u + 1]; ++i) --counts_[incidence_[i]][cu];
            colour_[u] = kNone;
        }
    }

    SolveStatus dfs(bool root) {
        if (nodes_ >= budget_) return SolveStatus::BudgetExceeded;
        ++nodes_;
        if (root) {
            for (std::size_t v = 0; v < verts_.size(); ++v) {
                if (allowed_[v] == kAllowBoth) continue;
                const std::int8_t c = allowed_[v] == kAllowRed ? 0 : 1;
                if (!propagate(v, c)) return SolveStatus::NotColourable;
            }
        }
        std::size_t best = verts_.size();
        std::uint32_t best_score = 0;
        bool any_uncoloured = false;
        for (std::size_t v = 0; v < verts_.size(); ++v) {
            if (colour_[v] != kNone) continue;
            any_uncoloured = true;
            std::uint32_t score = 0;
            for (std::uint32_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
                const auto& cnt = counts_[incidence_[i]];
                if (cnt[0] == 0 || cnt[1] == 0) ++score;
            }
            if (best == verts_.size() || score > best_score) {
                best = v;
                best_score = score;
            }
        }
        if (!any_uncoloured) return SolveStatus::Colourable;
        if (best_score == 0) {
            // every remaining vertex sits only in bichromatic edges
            for (std::size_t v = 0; v < verts_.size(); ++v) {
                if (colour_[v] == kNone) {
                    colour_[v] = (allowed_[v] & kAllowRed) ? 0 : 1;
                    trail_.push_back(v);
                    const auto cv = static_cast<std::size_t>(colour_[v]);
                    for (std::uint32_t i = offsets_[v]; i < offsets_[v + 1]; ++i) ++counts_[incidence_[i]][cv];
                }
            }
            return SolveStatus::Colourable;
        }
        for (std::int8_t c = 0; c < 2; ++c) {
            if (!(allowed_[best] & (1u << c))) continue;
            const std::size_t mark = trail_.size();
            if (propagate(best, c)) {
                const SolveStatus r = dfs(false);
                if (r != SolveStatus::NotColourable) return r;
            }
            undo(mark);
        }
        return SolveStatus::NotColourable;
    }

    Colouring make_witness(Element ground) const {
        Colouring w(ground);
        for (std::size_t v = 0; v < verts_.size(); ++v) {
            std::int8_t c = colour_[v];
            if (c == kNone) c = (allowed_[v] & kAllowRed) ? 0 : 1;
            w.assign(verts_[v], c == 0 ? Colour::Red : Colour::Blue);
        }
        return w;
    }

    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Element> verts_;
    std::vector<std::uint8_t> allowed_;
    std::vector<LocalEdge> edges_;
    std::vector<std::uint32_t> offsets_;
    std::vector<std::uint32_t> incidence_;
    std::vector<std::int8_t> colour_;
    std::vector<std::array<std::uint8_t, 2>> counts_;
    std::vector<std::size_t> trail_;
    std::vector<std::pair<std::size_t, std::int8_t>> queue_;
};

}  // namespace

SolveOutcome solve_colouring(const HostingHypergraph& h, const ColourConstraint& constraint,
                             std::uint64_t budget) {
    Search search(h, constraint, budget);
    return search.run(h.vertices.ground());
}

SolveOutcome find_schur_colouring(const IntSet& s, const ColourConstraint& constraint,
                                  std::uint64_t budget) {
    return solve_colouring(build_schur_hypergraph(s), constraint, budget);
}

SchurVerdict is_schur(const IntSet& s, std::uint64_t budget) {
    switch (find_schur_colouring(s, {}, budget).status) {
        case SolveStatus::Colourable: return SchurVerdict::NotSchur;
        case SolveStatus::NotColourable: return SchurVerdict::Schur;
        case SolveStatus::BudgetExceeded: break;
    }
    return SchurVerdict::Unknown;
}

std::vector<HostingSet> validate_colouring(const IntSet& s, const Colouring& c) {
    IntSet red(s.ground()), blue(s.ground());
    s.for_each([&](Element x) {
        const auto col = c.colour_of(x);
        if (!col) throw std::invalid_argument("colouring misses element " + std::to_string(x));
        (*col == Colour::Red ? red : blue).insert(x);
    });
    // a monochromatic hosting set lives entirely inside one colour class
    std::vector<HostingSet> out = hosting_sets(red);
    const auto blue_edges = hosting_sets(blue);
    out.insert(out.end(), blue_edges.begin(), blue_edges.end());
    std::sort(out.begin(), out.end());
    return out;
}

ObstructionOutcome minimal_obstruction(const IntSet& s, const ColourConstraint& constraint,
                                       std::uint64_t budget) {
    return minimal_obstruction(build_schur_hypergraph(s), constraint, budget);
}

ObstructionOutcome minimal_obstruction(const HostingHypergraph& h, const ColourConstraint& constraint,
                                       std::uint64_t budget) {
    ObstructionOutcome out;
    const SolveOutcome full = solve_colouring(h, constraint, budget);
    out.status = full.status;
    out.nodes_explored = full.nodes_explored;
    if (full.status != SolveStatus::NotColourable) return out;

    std::vector<HostingSet> kept = h.edges;
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    HostingHypergraph trial{h.vertices, {}};
    for (std::size_t i = kept.size(); i-- > 0;) {
        trial.edges.clear();
        trial.edges.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j != i) trial.edges.push_back(kept[j]);
        }
        const SolveOutcome r = solve_colouring(trial, constraint, budget);
        out.nodes_explored += r.nodes_explored;
        if (r.status == SolveStatus::BudgetExceeded) {
            out.status = SolveStatus::BudgetExceeded;
            return out;
        }
        if (r.status == SolveStatus::NotColourable) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    }

    HostingHypergraph result{IntSet(h.vertices.ground()), std::move(kept)};
    for (const auto& e : result.edges) {
        for (Element x : e.view()) result.vertices.insert(x);
    }
    h.vertices.for_each([&](Element x) {
        if (constraint.mask(x) == 0) result.vertices.insert(x);
    });
    out.obstruction = std::move(result);
    return out;
}

namespace {

std::size_t overlap(const HostingSet& a, const HostingSet& b) {
    std::size_t k = 0;
    for (Element x : a.view()) k += b.contains(x) ? 1 : 0;
    return k;
}

// The single common vertex of two edges known to overlap in exactly one vertex.
Element common_vertex(const HostingSet& a, const HostingSet& b) {
    for (Element x : a.view()) {
        if (b.contains(x)) return x;
    }
    return 0;
}

EdgeType classify_edge(const HostingSet& e, const IntSet& base) {
    std::size_t in_base = 0;
    for (Element x : e.view()) in_base += base.contains(x) ? 1 : 0;
    if (in_base == 0) return EdgeType::T1;
    if (in_base == 1) return EdgeType::T2;
    return EdgeType::Other;
}

LooseCycle describe_cycle(std::vector<HostingSet> edges, const IntSet& base) {
    LooseCycle c;
    c.edges = std::move(edges);
    const std::size_t len = c.edges.size();
    for (const auto& e : c.edges) c.types.push_back(classify_edge(e, base));
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t j = (i + 1) % len;
        if (c.types[i] == EdgeType::T2 && c.types[j] == EdgeType::T2) ++c.consecutive_t2_pairs;
        if (base.contains(common_vertex(c.edges[i], c.edges[j]))) c.junctions_outside_base = false;
    }
    return c;
}

class CycleSearch {
public:
    explicit CycleSearch(const std::vector<HostingSet>& edges) : edges_(edges) {}

    std::optional<std::vector<HostingSet>> run() {
        for (std::size_t first = 0; first < edges_.size(); ++first) {
            path_ = {first};
            if (extend()) {
                std::vector<HostingSet> out;
                for (std::size_t i : path_) out.push_back(edges_[i]);
                return out;
            }
        }
        return std::nullopt;
    }

private:
    // Edges with smaller index than path_[0] are excluded so each cycle is tried from its least edge.
    bool extend() {
        const std::size_t first = path_.front();
        const HostingSet& last = edges_[path_.back()];
        const std::size_t k = path_.size();
        for (std::size_t cand = first + 1; cand < edges_.size(); ++cand) {
            if (std::find(path_.begin(), path_.end(), cand) != path_.end()) continue;
            const HostingSet& e = edges_[cand];
            if (overlap(e, last) != 1) continue;
            const Element join = common_vertex(e, last);
            if (k >= 2 && join == common_vertex(last, edges_[path_[k - 2]])) continue;
            bool clash = false;
            for (std::size_t i = 1; i + 1 < k && !clash; ++i) clash = overlap(e, edges_[path_[i]]) != 0;
            if (clash) continue;
            const std::size_t with_first = k == 1 ? 1 : overlap(e, edges_[first]);
            if (k >= 2 && with_first == 1) {
                const Element close = common_vertex(e, edges_[first]);
                const Element first_join = common_vertex(edges_[first], edges_[path_[1]]);
                if (close != join && close != first_join) {
                    path_.push_back(cand);
                    return true;
                }
                continue;
            }
            if (k >= 2 && with_first != 0) continue;
            path_.push_back(cand);
            if (extend()) return true;
            path_.pop_back();
        }
        return false;
    }

    const std::vector<HostingSet>& edges_;
    std::vector<std::size_t> path_;
};

// Walk h_0, h_1, ... where consecutive edges meet in one perturbation vertex,
// stopping at the first revisit; the tail from the latest revisited edge is a candidate.
std::optional<std::vector<HostingSet>> walk_cycle(const std::vector<HostingSet>& edges, const IntSet& base,
                                                  std::size_t start) {
    std::vector<std::size_t> walk{start};
    std::vector<Element> pivots;
    auto pick_pivot = [&](const HostingSet& e, Element avoid) -> Element {
        for (Element x : e.view()) {
            if (x != avoid && !base.contains(x)) return x;
        }
        return 0;
    };
    Element pivot = pick_pivot(edges[start], 0);
    while (pivot != 0 && walk.size() <= edges.size()) {
        const HostingSet& cur = edges[walk.back()];
        std::optional<std::size_t> next;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (j == walk.back() || !edges[j].contains(pivot) || overlap(edges[j], cur) != 1) continue;
            next = j;
            break;
        }
        if (!next) return std::nullopt;
        pivots.push_back(pivot);
        const HostingSet& h = edges[*next];
        // latest earlier edge (before the current one) sharing a vertex other than the pivot
        for (std::size_t r = walk.size() - 1; r-- > 0;) {
            bool hit = false;
            for (Element y : h.view()) {
                if (y != pivot && edges[walk[r]].contains(y)) hit = true;
            }
            if (hit) {
                std::vector<HostingSet> cycle;
                for (std::size_t i = r; i < walk.size(); ++i) cycle.push_back(edges[walk[i]]);
                cycle.push_back(h);
                return cycle;
            }
        }
        walk.push_back(*next);
        pivot = pick_pivot(h, pivot);
    }
    return std::nullopt;
}

}  // namespace

HminReport check_hmin_properties(const HostingHypergraph& h, const IntSet& base) {
    HminReport r;
    std::set<std::pair<Element, Element>> pairs;
    for (const auto& e : h.edges) {
        if (e.count != 3) r.uniform3 = false;
        std::size_t in_base = 0;
        for (Element x : e.view()) in_base += base.contains(x) ? 1 : 0;
        if (in_base > 1) r.one_base_per_edge = false;
        for (std::uint8_t i = 0; i < e.count; ++i) {
            for (std::uint8_t j = i + 1; j < e.count; ++j) {
                if (!pairs.emplace(e.elems[i], e.elems[j]).second) r.linear = false;
            }
        }
    }
    return r;
}

bool is_loose_cycle(const std::vector<HostingSet>& edges) {
    const std::size_t len = edges.size();
    if (len < 3) return false;
    std::vector<Element> joins;
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
            const bool neighbours = j == i + 1 || (i == 0 && j == len - 1);
            const std::size_t k = overlap(edges[i], edges[j]);
            if (neighbours ? k != 1 : k != 0) return false;
        }
        joins.push_back(common_vertex(edges[i], edges[(i + 1) % len]));
    }
    std::sort(joins.begin(), joins.end());
    return std::adjacent_find(joins.begin(), joins.end()) == joins.end();
}

std::optional<LooseCycle> find_loose_cycle(const HostingHypergraph& h, const IntSet& base) {
    for (const auto& e : h.edges) {
        if (e.count != 3) throw std::invalid_argument("loose cycles need a 3-uniform hypergraph");
    }
    std::vector<HostingSet> edges = h.edges;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (std::size_t start = 0; start < edges.size(); ++start) {
        auto cycle = walk_cycle(edges, base, start);
        if (cycle && is_loose_cycle(*cycle)) return describe_cycle(std::move(*cycle), base);
    }
    if (edges.size() <= kExhaustiveCycleEdges) {
        auto cycle = CycleSearch(edges).run();
        if (cycle) return describe_cycle(std::move(*cycle), base);
    }
    return std::nullopt;
}

}  // namespace schurlab
