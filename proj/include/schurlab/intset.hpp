#ifndef SCHURLAB_INTSET_HPP
#define SCHURLAB_INTSET_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schurlab {

using Element = std::uint32_t;

/// Largest supported ground size n; keeps one membership bitset under 2 MiB.
inline constexpr Element kMaxGround = Element{1} << 24;

/// Largest n accepted by enumerate_large_sum_free.
inline constexpr Element kExhaustiveLimit = 26;

/// Raised when an exhaustive operation is asked to run beyond its size limit.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A subset of the ground interval [1, n] backed by a bitset.
 *
 * Bit x of the underlying word array stands for element x, so bit 0 is
 * always clear. Sets are plain values: copy freely, share across threads.
 */
class IntSet {
public:
    /// Empty set over [1, 1].
    IntSet() : IntSet(1) {}

    /// Empty set over [1, n]; throws std::invalid_argument unless 1 <= n <= kMaxGround.
    explicit IntSet(Element n);

    static IntSet full(Element n);
    /// [lo, hi] as a subset of [1, n]; empty when lo > hi.
    static IntSet interval(Element n, Element lo, Element hi);
    static IntSet of(Element n, std::initializer_list<Element> elements);
    static IntSet from(Element n, std::span<const Element> elements);

    Element ground() const noexcept { return n_; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool contains(Element x) const noexcept {
        return x >= 1 && x <= n_ && ((words_[x >> 6] >> (x & 63)) & 1u);
    }

    void insert(Element x);
    void erase(Element x) noexcept;

    /// Smallest member, or 0 when empty.
    Element min() const noexcept;
    /// Largest member, or 0 when empty.
    Element max() const noexcept;

    /// Number of members in [lo, hi].
    std::size_t count_in(Element lo, Element hi) const noexcept;

    /// Number of y in the set with y + d also in the set.
    std::size_t shift_overlap(Element d) const noexcept;

    std::vector<Element> elements() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    /// Same members over a different ground; throws if a member exceeds n.
    IntSet regrounded(Element n) const;

    IntSet operator|(const IntSet& other) const;
    IntSet operator&(const IntSet& other) const;
    IntSet operator-(const IntSet& other) const;
    /// Complement within [1, n].
    IntSet complement() const;

    bool is_subset_of(const IntSet& other) const;
    bool intersects(const IntSet& other) const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const IntSet& a, const IntSet& b) noexcept {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    void require_same_ground(const IntSet& other) const;
    void clear_tail() noexcept;
    void recount() noexcept;

    Element n_ = 1;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/**
 * The underlying set {x} ∪ {y} ∪ {z} of a Schur triple x + y = z.
 *
 * Degenerate triples (x, x, 2x) give two-element sets. Members are stored
 * ascending; ordering compares size first, then members lexicographically.
 */
struct HostingSet {
    std::uint8_t count = 0;
    std::array<Element, 3> elems{};

    static HostingSet pair(Element a, Element b);
    static HostingSet triple(Element a, Element b, Element c);

    std::span<const Element> view() const noexcept { return {elems.data(), count}; }
    bool contains(Element x) const noexcept;

    friend auto operator<=>(const HostingSet&, const HostingSet&) = default;
};

/// True iff the given distinct elements form {x} ∪ {y} ∪ {x + y} for some x, y.
bool hosts_schur_triple(std::span<const Element> elements);

struct SchurTriple {
    Element x = 0, y = 0, z = 0;
    bool degenerate() const noexcept { return x == y; }
    HostingSet hosting_set() const;
    friend auto operator<=>(const SchurTriple&, const SchurTriple&) = default;
};

bool is_sum_free(const IntSet& s);

/// Distinct subsets of s hosting a Schur triple, sorted by size then lexicographically.
std::vector<HostingSet> hosting_sets(const IntSet& s);

/// Number of distinct hosting sets in s (degenerate ones included).
std::uint64_t count_hosting_sets(const IntSet& s);

/// Ordered (x, y, z) in s^3 with x + y = z.
std::uint64_t count_ordered_triples(const IntSet& s, bool nondegenerate_only = false);

/// Pairs (a, d), d >= 1, with a, a+d, a+2d, a+3d all in s.
std::uint64_t count_4aps(const IntSet& s);

/// Common differences of the 4-term progressions in s.
IntSet ap_differences(const IntSet& s);

/// {b - a : a < b both in s}, over the same ground.
IntSet positive_differences(const IntSet& s);

/// {y in a : x + y in a}.
IntSet link_plus(const IntSet& a, Element x);
/// {y in a : x - y in a}.
IntSet link_minus(const IntSet& a, Element x);
IntSet link(const IntSet& a, Element x);

/**
 * Visits every sum-free subset of [n] of size at least min_size exactly
 * once, in lexicographic order of the sorted member lists. Returns the
 * number of sets visited. Throws LimitExceeded when n > kExhaustiveLimit.
 */
std::uint64_t enumerate_large_sum_free(Element n, std::size_t min_size,
                                       const std::function<void(const IntSet&)>& visit);

std::vector<IntSet> large_sum_free_sets(Element n, std::size_t min_size);

/// Compact run-length text "a-b,c,d-e"; the empty set is "".
std::string format_compact(const IntSet& s);

/**
 * Parses the run-length form. With ground 0 the ground becomes the largest
 * member (1 for the empty set). Throws std::invalid_argument on malformed input.
 */
IntSet parse_compact(std::string_view text, Element ground = 0);

}  // namespace schurlab

#endif  // SCHURLAB_INTSET_HPP
