#include "schurlab/intset.hpp"

#include <algorithm>
#include <charconv>

namespace schurlab {

namespace {

std::size_t word_count(Element n) { return static_cast<std::size_t>(n) / 64 + 1; }

// Word w of the set shifted down by d: bit y is set iff y + d is a member.
inline std::uint64_t shifted_word(std::span<const std::uint64_t> words, std::size_t w, Element d) {
    const std::size_t q = d >> 6;
    const unsigned r = d & 63;
    const std::size_t lo = w + q;
    if (lo >= words.size()) return 0;
    std::uint64_t out = words[lo] >> r;
    if (r != 0 && lo + 1 < words.size()) out |= words[lo + 1] << (64 - r);
    return out;
}

}  // namespace

IntSet::IntSet(Element n) : n_(n) {
    if (n < 1 || n > kMaxGround) {
        throw std::invalid_argument("ground size must lie in [1, 2^24], got " + std::to_string(n));
    }
    words_.assign(word_count(n), 0);
}

IntSet IntSet::full(Element n) { return interval(n, 1, n); }

IntSet IntSet::interval(Element n, Element lo, Element hi) {
    IntSet s(n);
    if (lo > hi) return s;
    if (lo < 1 || hi > n) {
        throw std::invalid_argument("interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                    "] outside [1, " + std::to_string(n) + "]");
    }
    for (Element x = lo; x <= hi; ++x) s.words_[x >> 6] |= std::uint64_t{1} << (x & 63);
    s.size_ = hi - lo + 1;
    return s;
}

IntSet IntSet::of(Element n, std::initializer_list<Element> elements) {
    return from(n, std::span<const Element>(elements.begin(), elements.size()));
}

IntSet IntSet::from(Element n, std::span<const Element> elements) {
    IntSet s(n);
    for (Element x : elements) s.insert(x);
    return s;
}

void IntSet::insert(Element x) {
    if (x < 1 || x > n_) {
        throw std::invalid_argument("element " + std::to_string(x) + " outside [1, " +
                                    std::to_string(n_) + "]");
    }
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (!(w & bit)) {
        w |= bit;
        ++size_;
    }
}

void IntSet::erase(Element x) noexcept {
    if (!contains(x)) return;
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    --size_;
}

Element IntSet::min() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
    }
    return 0;
}

Element IntSet::max() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w]) return static_cast<Element>(w * 64 + 63 - std::countl_zero(words_[w]));
    }
    return 0;
}

std::size_t IntSet::count_in(Element lo, Element hi) const noexcept {
    lo = std::max<Element>(lo, 1);
    hi = std::min(hi, n_);
    if (lo > hi) return 0;
    std::size_t total = 0;
    const std::size_t wlo = lo >> 6, whi = hi >> 6;
    for (std::size_t w = wlo; w <= whi; ++w) {
        std::uint64_t bits = words_[w];
        if (w == wlo) bits &= ~std::uint64_t{0} << (lo & 63);
        if (w == whi && (hi & 63) != 63) bits &= (std::uint64_t{1} << ((hi & 63) + 1)) - 1;
        total += static_cast<std::size_t>(std::popcount(bits));
    }
    return total;
}

std::size_t IntSet::shift_overlap(Element d) const noexcept {
    if (d == 0) return size_;
    if (d >= n_) return 0;
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const std::uint64_t bits = words_[w];
        if (bits) total += static_cast<std::size_t>(std::popcount(bits & shifted_word(words_, w, d)));
    }
    return total;
}

std::vector<Element> IntSet::elements() const {
    std::vector<Element> out;
    out.reserve(size_);
    for_each([&](Element x) { out.push_back(x); });
    return out;
}

IntSet IntSet::regrounded(Element n) const {
    IntSet out(n);
    for_each([&](Element x) { out.insert(x); });
    return out;
}

void IntSet::require_same_ground(const IntSet& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("set operation on different grounds (" + std::to_string(n_) +
                                    " vs " + std::to_string(other.n_) + ")");
    }
}

void IntSet::clear_tail() noexcept {
    words_[0] &= ~std::uint64_t{1};
    const unsigned used = (n_ & 63) + 1;
    if (used < 64) words_.back() &= (std::uint64_t{1} << used) - 1;
}

void IntSet::recount() noexcept {
    size_ = 0;
    for (std::uint64_t w : words_) size_ += static_cast<std::size_t>(std::popcount(w));
}

IntSet IntSet::operator|(const IntSet& other) const {
    require_same_ground(other);
    IntSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
    out.recount();
    return out;
}

IntSet IntSet::operator&(const IntSet& other) const {
    require_same_ground(other);
    IntSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
    out.recount();
    return out;
}

IntSet IntSet::operator-(const IntSet& other) const {
    require_same_ground(other);
    IntSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
    out.recount();
    return out;
}

IntSet IntSet::complement() const {
    IntSet out = *this;
    for (auto& w : out.words_) w = ~w;
    out.clear_tail();
    out.recount();
    return out;
}

bool IntSet::is_subset_of(const IntSet& other) const {
    require_same_ground(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
}

bool IntSet::intersects(const IntSet& other) const {
    require_same_ground(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & other.words_[w]) return true;
    }
    return false;
}

HostingSet HostingSet::pair(Element a, Element b) {
    if (a > b) std::swap(a, b);
    return HostingSet{2, {a, b, 0}};
}

HostingSet HostingSet::triple(Element a, Element b, Element c) {
    std::array<Element, 3> e{a, b, c};
    std::sort(e.begin(), e.end());
    return HostingSet{3, e};
}

bool HostingSet::contains(Element x) const noexcept {
    for (std::uint8_t i = 0; i < count; ++i) {
        if (elems[i] == x) return true;
    }
    return false;
}

bool hosts_schur_triple(std::span<const Element> elements) {
    std::array<Element, 3> e{};
    if (elements.size() == 2) {
        e[0] = std::min(elements[0], elements[1]);
        e[1] = std::max(elements[0], elements[1]);
        return e[0] != e[1] && e[1] == 2 * e[0];
    }
    if (elements.size() == 3) {
        std::copy(elements.begin(), elements.end(), e.begin());
        std::sort(e.begin(), e.end());
        return e[0] != e[1] && e[1] != e[2] && e[0] + e[1] == e[2];
    }
    return false;
}

HostingSet SchurTriple::hosting_set() const {
    return degenerate() ? HostingSet::pair(x, z) : HostingSet::triple(x, y, z);
}

bool is_sum_free(const IntSet& s) {
    bool found = false;
    s.for_each([&](Element x) {
        if (!found && s.shift_overlap(x) > 0) found = true;
    });
    return !found;
}

std::vector<HostingSet> hosting_sets(const IntSet& s) {
    std::vector<HostingSet> out;
    const Element top = s.max();
    const auto words = s.words();
    s.for_each([&](Element x) {
        if (2 * static_cast<std::uint64_t>(x) > top) return;
        // y >= x with y and x + y both members
        for (std::size_t w = x >> 6; w <= static_cast<std::size_t>(top - x) >> 6; ++w) {
            std::uint64_t bits = words[w] & shifted_word(words, w, x);
            if (w == (x >> 6)) bits &= ~std::uint64_t{0} << (x & 63);
            while (bits) {
                const auto y = static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
                out.push_back(x == y ? HostingSet::pair(x, 2 * x) : HostingSet::triple(x, y, x + y));
            }
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_ordered_triples(const IntSet& s, bool nondegenerate_only) {
    std::uint64_t total = 0, degenerate = 0;
    s.for_each([&](Element x) {
        total += s.shift_overlap(x);
        if (s.contains(2 * x)) ++degenerate;
    });
    return nondegenerate_only ? total - degenerate : total;
}

std::uint64_t count_hosting_sets(const IntSet& s) {
    std::uint64_t degenerate = 0;
    s.for_each([&](Element x) {
        if (s.contains(2 * x)) ++degenerate;
    });
    // ordered count = 2 * nondegenerate + degenerate
    return (count_ordered_triples(s) + degenerate) / 2;
}

std::uint64_t count_4aps(const IntSet& s) {
    const auto words = s.words();
    std::uint64_t total = 0;
    const Element n = s.ground();
    for (Element d = 1; 3 * static_cast<std::uint64_t>(d) < n; ++d) {
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            if (!bits) continue;
            bits &= shifted_word(words, w, d);
            if (bits) bits &= shifted_word(words, w, 2 * d);
            if (bits) bits &= shifted_word(words, w, 3 * d);
            total += static_cast<std::uint64_t>(std::popcount(bits));
        }
    }
    return total;
}

IntSet ap_differences(const IntSet& s) {
    IntSet out(s.ground());
    const auto words = s.words();
    const Element n = s.ground();
    for (Element d = 1; 3 * static_cast<std::uint64_t>(d) < n; ++d) {
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w] & shifted_word(words, w, d);
            if (bits) bits &= shifted_word(words, w, 2 * d);
            if (bits) bits &= shifted_word(words, w, 3 * d);
            if (bits) {
                out.insert(d);
                break;
            }
        }
    }
    return out;
}

IntSet positive_differences(const IntSet& s) {
    IntSet out(s.ground());
    const auto members = s.elements();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) out.insert(members[j] - members[i]);
    }
    return out;
}

IntSet link_plus(const IntSet& a, Element x) {
    IntSet out(a.ground());
    a.for_each([&](Element y) {
        if (static_cast<std::uint64_t>(x) + y <= a.ground() && a.contains(x + y)) out.insert(y);
    });
    return out;
}

IntSet link_minus(const IntSet& a, Element x) {
    IntSet out(a.ground());
    a.for_each([&](Element y) {
        if (y < x && a.contains(x - y)) out.insert(y);
    });
    return out;
}

IntSet link(const IntSet& a, Element x) { return link_plus(a, x) | link_minus(a, x); }

namespace {

struct SumFreeEnumerator {
    Element n;
    std::size_t min_size;
    const std::function<void(const IntSet&)>& visit;
    std::uint64_t visited = 0;
    std::uint32_t mask = 0;  // bit x-1 for element x
    std::size_t size = 0;

    bool addable(Element x) const {
        for (Element a = 1; 2 * a <= x; ++a) {
            if ((mask >> (a - 1) & 1u) && (mask >> (x - a - 1) & 1u)) return false;
        }
        return true;
    }

    void emit() {
        IntSet s(n);
        for (Element x = 1; x <= n; ++x) {
            if (mask >> (x - 1) & 1u) s.insert(x);
        }
        visit(s);
        ++visited;
    }

    void extend(Element last) {
        if (size >= min_size) emit();
        for (Element x = last + 1; x <= n; ++x) {
            if (size + 1 + (n - x) < min_size) break;
            if (!addable(x)) continue;
            mask |= 1u << (x - 1);
            ++size;
            extend(x);
            --size;
            mask &= ~(1u << (x - 1));
        }
    }
};

}  // namespace

std::uint64_t enumerate_large_sum_free(Element n, std::size_t min_size,
                                       const std::function<void(const IntSet&)>& visit) {
    if (n < 1) throw std::invalid_argument("ground size must be positive");
    if (n > kExhaustiveLimit) {
        throw LimitExceeded("exhaustive sum-free enumeration is limited to n <= " +
                            std::to_string(kExhaustiveLimit) + ", got " + std::to_string(n));
    }
    if (min_size > n) return 0;
    SumFreeEnumerator e{n, min_size, visit};
    e.extend(0);
    return e.visited;
}

std::vector<IntSet> large_sum_free_sets(Element n, std::size_t min_size) {
    std::vector<IntSet> out;
    enumerate_large_sum_free(n, min_size, [&](const IntSet& s) { out.push_back(s); });
    return out;
}

std::string format_compact(const IntSet& s) {
    std::string out;
    const auto members = s.elements();
    for (std::size_t i = 0; i < members.size();) {
        std::size_t j = i;
        while (j + 1 < members.size() && members[j + 1] == members[j] + 1) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(members[i]);
        if (j > i) {
            out += '-';
            out += std::to_string(members[j]);
        }
        i = j + 1;
    }
    return out;
}

namespace {

Element parse_element(std::string_view token, std::string_view whole) {
    Element value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last || value == 0) {
        throw std::invalid_argument("malformed set literal \"" + std::string(whole) + "\"");
    }
    return value;
}

}  // namespace

IntSet parse_compact(std::string_view text, Element ground) {
    std::vector<std::pair<Element, Element>> runs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view token = text.substr(pos, comma - pos);
        const std::size_t dash = token.find('-');
        if (dash == std::string_view::npos) {
            const Element v = parse_element(token, text);
            runs.emplace_back(v, v);
        } else {
            const Element lo = parse_element(token.substr(0, dash), text);
            const Element hi = parse_element(token.substr(dash + 1), text);
            if (lo > hi) throw std::invalid_argument("descending range in \"" + std::string(text) + "\"");
            runs.emplace_back(lo, hi);
        }
        pos = comma + 1;
        if (comma + 1 == text.size()) {
            throw std::invalid_argument("trailing comma in \"" + std::string(text) + "\"");
        }
    }
    Element top = 1;
    for (const auto& r : runs) top = std::max(top, r.second);
    const Element n = ground == 0 ? top : ground;
    IntSet s(n);
    for (const auto& [lo, hi] : runs) {
        for (Element x = lo; x <= hi; ++x) s.insert(x);
    }
    return s;
}

}  // namespace schurlab
