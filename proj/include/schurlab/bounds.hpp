#ifndef SCHURLAB_BOUNDS_HPP
#define SCHURLAB_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "schurlab/intset.hpp"

namespace schurlab {

struct JansonParams {
    double mu = 0;     ///< expected count
    double delta = 0;  ///< correlation sum over intersecting ordered pairs
    double t = 0;      ///< deviation, 0 <= t <= mu
};

/// exp(-t^2 / (2 (mu + delta))); 1 when mu + delta = 0. Throws on invalid parameters.
double janson_lower_tail(const JansonParams& p);

struct TripleMoments {
    std::size_t distinct_triples = 0;  ///< triples left after merging equal hosting sets
    double mu_exact = 0;
    double delta_exact = 0;
    double delta_star = 0;
};

/// 27 (n^2 p^4 + n^3 p^5).
double triple_delta_star(Element n, double p);

/**
 * First moment and exact correlation sum for the appearance of the given
 * ordered nondegenerate triples in a p-random subset of [n]. Triples with a
 * common hosting set are merged (first occurrence kept). Throws on a
 * degenerate or out-of-range triple.
 */
TripleMoments triple_moments(const std::vector<SchurTriple>& triples, Element n, double p);

/// All ordered nondegenerate triples inside s.
std::vector<SchurTriple> ordered_nondegenerate_triples(const IntSet& s);

struct WicketDeltaBound {
    double termwise = 0;      ///< the nine-term bracketed bound times |W| 2^9 p^9
    double collected = 0;     ///< 2^104 |W| p^9 (n^4 p^8 + n^3 p^6 + n^2 p^4 + n p^2 + 1)
    double simplified = 0;    ///< 2^108 C^4 |W| p^9
    bool simplified_dominates = false;  ///< termwise <= simplified
};

/// Requires p <= C n^{-1/2}, p in [0, 1], C > 0; throws std::invalid_argument otherwise.
WicketDeltaBound wicket_delta_bound(double wicket_count, Element n, double p, double C);

enum class DenseCase { CaseI, CaseII1, CaseII2, Unclassified };
const char* dense_case_name(DenseCase c);

inline constexpr double kDefaultClassifierDelta = 1e-3;
inline constexpr double kDefaultClassifierEpsilon = 1.0 / 28.0;

struct DenseCaseReport {
    Element n = 0;
    double delta = 0, epsilon = 0;
    std::uint64_t triple_sets = 0;   ///< hosting sets in A
    std::uint64_t even_count = 0;    ///< even members of A
    std::uint64_t missing_odds = 0;  ///< odd members of [n] outside A
    std::uint64_t missing_top = 0;   ///< |[ceil(n/2), n] \ A|
    std::int64_t t = 0;              ///< |A| - ceil(n/2)
    DenseCase label = DenseCase::Unclassified;
};

/// Requires 0 < delta < 1 and 0 < epsilon < 1.
DenseCaseReport classify_dense_case(const IntSet& a, double delta = kDefaultClassifierDelta,
                                    double epsilon = kDefaultClassifierEpsilon);

}  // namespace schurlab

#endif  // SCHURLAB_BOUNDS_HPP
