#ifndef SCHURLAB_CONSTRUCTIONS_HPP
#define SCHURLAB_CONSTRUCTIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurlab/intset.hpp"
#include "schurlab/solver.hpp"

namespace schurlab {

/// Odd members of [n].
IntSet odd_set(Element n);
/// [floor(n/2) + 1, n].
IntSet top_interval(Element n);

struct ColouredSet {
    IntSet set;
    Colouring colouring;
};

/// [n] without multiples of 5; residues 1, 4 red and 2, 3 blue. Requires n >= 5.
ColouredSet mod5_construction(Element n);

/**
 * Interval base A = [ceil((n+1)/2) - t, n] split into a lower block B and the
 * top 2t elements C. B is coloured blue, everything else in [n] red.
 */
struct DenseZeroStatement {
    Element n = 0, t = 0;
    IntSet A, B, C;

    Colour colour_rule(Element e) const { return B.contains(e) ? Colour::Blue : Colour::Red; }
    /// colour_rule applied to every member of s.
    Colouring colour(const IntSet& s) const;
    /// Positive differences of C, i.e. [1, 2t - 1].
    IntSet c_differences() const;
    /// Elements below A; a perturbation only adds members here.
    Element lower_limit() const { return A.min() - 1; }
};

/// Requires 1 <= t and ceil(n/2) + t <= ceil(4n/5).
DenseZeroStatement dense_zero_statement(Element n, Element t);

/// [n - s + 1, n]; requires 1 <= s <= floor(n/2).
IntSet sparse_base(Element n, Element s);

/// Ground 0 means "size the ground to the largest listed value".
IntSet L1(Element a, Element x, Element d, Element n = 0);
/// Requires x > a + 3d so every listed value is positive.
IntSet L2(Element a, Element x, Element d, Element n = 0);

/// The listed values before collapsing duplicates (11 entries).
std::vector<Element> L1_values(Element a, Element x, Element d);
std::vector<Element> L2_values(Element a, Element x, Element d);

enum class PairKind { Plus, Minus };
const char* pair_kind_name(PairKind k);

struct PairPreimage {
    Element x = 0, d = 0;
    PairKind kind = PairKind::Plus;
    friend bool operator==(const PairPreimage&, const PairPreimage&) = default;
};

/// {d, x + d} for Plus, {d, x - d} for Minus, ascending.
std::array<Element, 2> pair_P(Element x, Element d, PairKind kind);

/// Every (x, d, kind) that pair_P maps to {u, v}; at most three. With n > 0 only x <= n is kept.
std::vector<PairPreimage> pair_preimages(Element u, Element v, Element n = 0);

struct PairPartition {
    Element alpha = 0, eta = 0;
    IntSet Q;
    std::vector<std::array<Element, 2>> pairs;
    /// eta below 60, where the 19/20 density guarantee is not claimed.
    bool small_eta = false;
};

/// Requires 1 <= alpha <= n.
PairPartition pair_partition(Element n, Element alpha);

/// Result of resolving a construction name such as "mod5" or "L1:2,1,1".
struct NamedConstruction {
    std::string name;
    IntSet set;
    std::optional<Colouring> colouring;
    /// Elements a sparse-regime obstruction treats as base, when meaningful.
    std::optional<IntSet> base;
};

/**
 * Names: "odd", "top", "mod5" (need n), "dense0:n,t", "sparse:n,s",
 * "L1:a,x,d", "L2:a,x,d". For the parameterised forms a nonzero n overrides
 * the ground. Throws std::invalid_argument on an unknown or malformed name.
 */
NamedConstruction resolve_construction(std::string_view name, Element n = 0);

}  // namespace schurlab

#endif  // SCHURLAB_CONSTRUCTIONS_HPP
