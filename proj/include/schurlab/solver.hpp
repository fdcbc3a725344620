#ifndef SCHURLAB_SOLVER_HPP
#define SCHURLAB_SOLVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schurlab/intset.hpp"

namespace schurlab {

enum class Colour : std::uint8_t { Red = 0, Blue = 1 };

inline constexpr std::uint8_t kAllowRed = 1;
inline constexpr std::uint8_t kAllowBlue = 2;
inline constexpr std::uint8_t kAllowBoth = kAllowRed | kAllowBlue;

inline std::uint8_t colour_bit(Colour c) { return c == Colour::Red ? kAllowRed : kAllowBlue; }
const char* colour_name(Colour c);

/// Red/blue assignment stored as two disjoint sets over a common ground.
struct Colouring {
    IntSet red, blue;

    Colouring() = default;
    explicit Colouring(Element n) : red(n), blue(n) {}

    void assign(Element x, Colour c);
    std::optional<Colour> colour_of(Element x) const;
    /// True iff every element of s is coloured.
    bool covers(const IntSet& s) const;

    friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Per-element allowed colours; elements not listed allow both.
struct ColourConstraint {
    std::map<Element, std::uint8_t> allowed;

    std::uint8_t mask(Element x) const;
    void restrict(Element x, std::uint8_t mask);
    void force(const IntSet& s, Colour c);
    static ColourConstraint blue_only(const IntSet& s);
};

struct HostingHypergraph {
    IntSet vertices;
    std::vector<HostingSet> edges;
};

enum class SolveStatus { Colourable, NotColourable, BudgetExceeded };
const char* status_name(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::BudgetExceeded;
    std::optional<Colouring> witness;
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class SchurVerdict { Schur, NotSchur, Unknown };
const char* verdict_name(SchurVerdict v);

HostingHypergraph build_schur_hypergraph(const IntSet& s);

/**
 * Proper 2-colouring search on an arbitrary hypergraph whose edges have
 * two or three vertices. Every vertex of h.vertices receives a colour in
 * the witness, including isolated ones.
 */
SolveOutcome solve_colouring(const HostingHypergraph& h, const ColourConstraint& constraint,
                             std::uint64_t budget = kDefaultBudget);

SolveOutcome find_schur_colouring(const IntSet& s, const ColourConstraint& constraint,
                                  std::uint64_t budget = kDefaultBudget);

SchurVerdict is_schur(const IntSet& s, std::uint64_t budget = kDefaultBudget);

/// Monochromatic hosting sets of s under c, in hosting_sets order.
/// Throws std::invalid_argument if c leaves an element of s uncoloured.
std::vector<HostingSet> validate_colouring(const IntSet& s, const Colouring& c);

struct ObstructionOutcome {
    SolveStatus status = SolveStatus::BudgetExceeded;  ///< status of the full instance
    std::optional<HostingHypergraph> obstruction;       ///< set iff NotColourable and extraction finished
    std::uint64_t nodes_explored = 0;
};

/**
 * Edge-minimal uncolourable sub-hypergraph, found by trying to delete edges
 * from the largest (in HostingSet order) down. BudgetExceeded is reported
 * if any of the solves runs out of budget; budget applies per solve.
 */
ObstructionOutcome minimal_obstruction(const IntSet& s, const ColourConstraint& constraint,
                                       std::uint64_t budget = kDefaultBudget);
ObstructionOutcome minimal_obstruction(const HostingHypergraph& h, const ColourConstraint& constraint,
                                       std::uint64_t budget = kDefaultBudget);

struct HminReport {
    bool uniform3 = true;
    bool one_base_per_edge = true;
    bool linear = true;
    bool all() const { return uniform3 && one_base_per_edge && linear; }
};

HminReport check_hmin_properties(const HostingHypergraph& h, const IntSet& base);

enum class EdgeType { T1, T2, Other };
const char* edge_type_name(EdgeType t);

struct LooseCycle {
    std::vector<HostingSet> edges;
    std::vector<EdgeType> types;
    std::size_t consecutive_t2_pairs = 0;
    /// Every vertex shared by two consecutive edges lies outside the base.
    bool junctions_outside_base = true;
};

/// Checks |e_i ∩ e_{i±1}| = 1 and disjointness of non-neighbours, length >= 3.
/// The shared vertices of consecutive pairs must also be pairwise distinct,
/// which rules out three edges through one common vertex.
bool is_loose_cycle(const std::vector<HostingSet>& edges);

inline constexpr std::size_t kExhaustiveCycleEdges = 64;

/**
 * A loose cycle in a 3-uniform hypergraph, or nullopt. The walk search runs
 * first; if it fails and there are at most kExhaustiveCycleEdges edges, a
 * complete search decides. Larger inputs with no walk-found cycle yield
 * nullopt. Throws std::invalid_argument on an edge of size other than 3.
 */
std::optional<LooseCycle> find_loose_cycle(const HostingHypergraph& h, const IntSet& base);

}  // namespace schurlab

#endif  // SCHURLAB_SOLVER_HPP
