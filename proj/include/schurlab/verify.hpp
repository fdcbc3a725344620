#ifndef SCHURLAB_VERIFY_HPP
#define SCHURLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "schurlab/intset.hpp"

namespace schurlab {

/// Outcome of a desk-scale verification suite.
struct VerifyReport {
    std::string suite;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    std::uint64_t budget_exceeded = 0;
    /// First few violations, human readable.
    std::vector<std::string> examples;

    bool ok() const { return violations == 0 && budget_exceeded == 0; }
    void record(std::string what);
};

/// Every A ⊆ [n] with |A| > ceil(4n/5) is Schur, and the mod 5 set of size ceil(4n/5) has a valid colouring.
VerifyReport verify_large_subsets(Element n_min, Element n_max);

/// L1 and L2 are Schur for every parameter triple with max element <= exhaustive_max,
/// plus random_count seeded triples with max element <= random_max.
VerifyReport verify_eleven_value_sets(Element exhaustive_max, std::uint64_t random_count, Element random_max,
                           std::uint64_t seed);

/// Sum-free S ⊆ [n] with |S| > 2n/5 + 1 is all odd or has min S > |S|.
VerifyReport verify_stability(Element n_min, Element n_max);

/// Pair-partition invariants for every (n, alpha) with n <= n_max.
VerifyReport verify_pair_partition(Element n_max);

/// Both wicket counting paths agree on [n] and on seeded random (S, chi) for n <= n_max;
/// containment counts respect the extension bound on seeded random U at bound_n.
VerifyReport verify_wickets(Element n_max, Element bound_n, std::uint64_t per_size, std::uint64_t seed);

/// (9!)^{l+1} n^l with l = ceil((8 - |U|) / 2), clamped at l >= 0.
double wicket_extension_bound(std::size_t u_size, Element n);

/// Exact correlation sum never exceeds 27 (n^2 p^4 + n^3 p^5) on seeded random triple families.
VerifyReport verify_moments(Element n_max, std::uint64_t count, std::uint64_t seed);

}  // namespace schurlab

#endif  // SCHURLAB_VERIFY_HPP
