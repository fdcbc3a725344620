#ifndef SCHURLAB_COLOURING_HYPERGRAPH_HPP
#define SCHURLAB_COLOURING_HYPERGRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "schurlab/intset.hpp"
#include "schurlab/solver.hpp"

namespace schurlab {

using ElementPair = std::array<Element, 2>;  // ascending

/// An edge {u_R, v_R, w_B, z_B}: a red pair and a blue pair sharing 1 or 2 targets.
struct HAEdge {
    ElementPair red{}, blue{};
    std::array<Element, 2> targets{};  ///< ascending; second is 0 when there is one target
    std::uint8_t target_count = 0;

    Element smallest_target() const { return targets[0]; }
    friend bool operator==(const HAEdge&, const HAEdge&) = default;
};

/**
 * The 4-uniform colouring hypergraph on two copies of [n], held implicitly:
 * an edge exists for every (red pair, blue pair) whose target sets meet, so
 * only the pairs and their targets are stored.
 */
struct ColouringHypergraph {
    Element n = 0;
    IntSet base;
    /// Every pair {u < v} with at least one target, ascending.
    std::vector<ElementPair> pairs;
    /// Targets of pairs[i], ascending, 0 padded.
    std::vector<std::array<Element, 2>> pair_targets;
    /// Base members ascending and, per member, indices of its pairs.
    std::vector<Element> targets;
    std::vector<std::vector<std::uint32_t>> pairs_of_target;

    std::uint64_t edge_count() const;
    /// Explicit edge list sorted by (red, blue); throws LimitExceeded above max_edges.
    std::vector<HAEdge> edges(std::uint64_t max_edges = 50'000'000) const;
};

/// Requires a ⊆ [n] (a's ground at most n).
ColouringHypergraph build_HA(const IntSet& a, Element n);

/// Targets t in base with {t, u, v} hosting a nondegenerate triple.
std::vector<Element> pair_targets(Element u, Element v, const IntSet& base);

struct HAStats {
    std::uint64_t edge_count = 0;
    std::uint64_t vertex_count = 0;  ///< N = 2n
    double average_degree = 0;       ///< 4e / N
    std::uint64_t max_pair_degree = 0;
    std::uint64_t max_triple_degree = 0;
    std::uint64_t max_quad_degree = 0;
    /// sum over vertices v of d_j(v), j = 2, 3, 4
    std::uint64_t sum_d2 = 0, sum_d3 = 0, sum_d4 = 0;
};

/// Exact statistics, computed from pair and target counts without listing edges.
HAStats ha_stats(const ColouringHypergraph& h);

enum class CodegreeVariant { MaxDegree, ExactSums };

/**
 * 32 delta_2 + 16 delta_3 + 4 delta_4 with N = 2n. MaxDegree bounds each
 * sum over v of d_j(v) by N Delta_j. Requires tau in (0, 1/2) unless
 * relaxed_domain, and a positive average degree.
 */
double codegree_delta(const HAStats& stats, Element n, double tau,
                      CodegreeVariant variant = CodegreeVariant::MaxDegree, bool relaxed_domain = false);

/// 2^10/(tau s) + 2^9/(tau^2 s n) + 2^5/(tau^3 s n).
double codegree_upper_estimate(Element n, Element s, double tau);

/// c s^{-1/3} n^{2/3} ln n, the log of the container count allowance.
double container_log_count_bound(Element n, Element s, double c);

/// Allowed colours per element: red copy present, blue copy present.
struct ContainerLike {
    Element n = 1;
    IntSet red, blue;

    ContainerLike() = default;
    ContainerLike(IntSet r, IntSet b);
};

struct ContainerParts {
    IntSet missing, red_only, blue_only, two_coloured;
};

ContainerParts partition_by_container(const ContainerLike& c);

enum class ContainerCase { CaseI, CaseII, CaseIII };
const char* container_case_name(ContainerCase c);

/// Case I if |M| >= eps n; Case II if R or B has >= eps n^2 ordered triples; else Case III.
ContainerCase container_case(const ContainerLike& c, double epsilon);

enum class Compatibility { Compatible, Incompatible, Unknown };
const char* compatibility_name(Compatibility c);

struct CompatibilityOutcome {
    Compatibility status = Compatibility::Unknown;
    std::optional<Colouring> witness;
    std::uint64_t nodes_explored = 0;
};

/// Schur colouring of a ∪ p that uses only colours the container allows.
CompatibilityOutcome is_compatible(const IntSet& a, const IntSet& p, const ContainerLike& c,
                                   std::uint64_t budget = kDefaultBudget);

enum class DenseSide { R, B };

struct DensityWitness {
    Element eta = 0;
    DenseSide side = DenseSide::R;
    std::size_t count = 0;  ///< |chi ∩ [eta]|
};

struct DensityCheck {
    std::optional<DensityWitness> witness;
    /// |M| < eps n and both one-colour parts hold fewer than eps n^2 ordered triples.
    bool hypotheses_hold = false;
};

/// Scans eta from n down to ceil(n/2), R before B, for 20 |chi ∩ [eta]| >= 9 eta.
DensityCheck pair_density_witness(const ContainerLike& c, double epsilon);

}  // namespace schurlab

#endif  // SCHURLAB_COLOURING_HYPERGRAPH_HPP
