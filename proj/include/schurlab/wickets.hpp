#ifndef SCHURLAB_WICKETS_HPP
#define SCHURLAB_WICKETS_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "schurlab/intset.hpp"

namespace schurlab {

/// (x1, y1, z1, x2, y2, z2, x3, y3, z3).
using WicketTuple = std::array<Element, 9>;

/// All entries in [1, n] and pairwise distinct, x_i + y_i = z_i and x1 + x2 = x3.
bool is_wicket(const WicketTuple& w, Element n);

enum class WicketMethod {
    Auto,              ///< explicit up to kExplicitWicketLimit, inclusion-exclusion above
    Explicit,          ///< enumerates the first two legs, counts the third
    InclusionExclusion ///< linear in the leg count per (x1, x2)
};

inline constexpr Element kExplicitWicketLimit = 128;

/**
 * Ordered wickets with every entry in s; with chi, the y_i and z_i must
 * also lie in chi. Sets must share one ground. Work is split over x1
 * across `workers` threads; the total does not depend on it.
 */
std::uint64_t count_wickets(const IntSet& s, const std::optional<IntSet>& chi = std::nullopt,
                            WicketMethod method = WicketMethod::Auto, unsigned workers = 1);

/// Ordered wickets in [n] whose entry set contains u. Members of u above n give 0.
std::uint64_t count_wickets_containing(const IntSet& u, Element n);

inline constexpr Element kWicketSetLimit = 30;

/// Distinct 9-element entry sets of wickets in s (and chi). Throws LimitExceeded above kWicketSetLimit.
std::uint64_t count_wicket_sets(const IntSet& s, const std::optional<IntSet>& chi = std::nullopt);

/// Lexicographically first ordered wicket, if any.
std::optional<WicketTuple> first_wicket(const IntSet& s, const std::optional<IntSet>& chi = std::nullopt);

}  // namespace schurlab

#endif  // SCHURLAB_WICKETS_HPP
