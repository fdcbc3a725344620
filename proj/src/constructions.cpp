#include "schurlab/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace schurlab {

namespace {

Element ceil_div(Element a, Element b) { return (a + b - 1) / b; }

IntSet set_from_values(const std::vector<Element>& values, Element n, const char* what) {
    const Element top = *std::max_element(values.begin(), values.end());
    const Element ground = n == 0 ? top : n;
    if (top > ground) {
        throw std::invalid_argument(std::string(what) + " has element " + std::to_string(top) +
                                    " outside [1, " + std::to_string(ground) + "]");
    }
    return IntSet::from(ground, values);
}

}  // namespace

IntSet odd_set(Element n) {
    IntSet s(n);
    for (Element x = 1; x <= n; x += 2) s.insert(x);
    return s;
}

IntSet top_interval(Element n) { return IntSet::interval(n, n / 2 + 1, n); }

ColouredSet mod5_construction(Element n) {
    if (n < 5) throw std::invalid_argument("mod5 construction needs n >= 5");
    ColouredSet out{IntSet(n), Colouring(n)};
    for (Element x = 1; x <= n; ++x) {
        const Element r = x % 5;
        if (r == 0) continue;
        out.set.insert(x);
        out.colouring.assign(x, (r == 1 || r == 4) ? Colour::Red : Colour::Blue);
    }
    return out;
}

Colouring DenseZeroStatement::colour(const IntSet& s) const {
    Colouring c(s.ground());
    s.for_each([&](Element x) { c.assign(x, colour_rule(x)); });
    return c;
}

IntSet DenseZeroStatement::c_differences() const { return positive_differences(C); }

DenseZeroStatement dense_zero_statement(Element n, Element t) {
    if (t < 1 || n < 1 || ceil_div(n, 2) + t > ceil_div(4 * n, 5)) {
        throw std::invalid_argument("dense construction needs 1 <= t and ceil(n/2) + t <= ceil(4n/5), got n=" +
                                    std::to_string(n) + ", t=" + std::to_string(t));
    }
    DenseZeroStatement d;
    d.n = n;
    d.t = t;
    const Element lo = (n + 2) / 2 - t;  // ceil((n+1)/2) - t
    d.A = IntSet::interval(n, lo, n);
    d.B = IntSet::interval(n, lo, n - 2 * t);
    d.C = IntSet::interval(n, n - 2 * t + 1, n);
    return d;
}

IntSet sparse_base(Element n, Element s) {
    if (s < 1 || s > n / 2) {
        throw std::invalid_argument("sparse base needs 1 <= s <= floor(n/2), got n=" + std::to_string(n) +
                                    ", s=" + std::to_string(s));
    }
    return IntSet::interval(n, n - s + 1, n);
}

std::vector<Element> L1_values(Element a, Element x, Element d) {
    if (a < 1 || x < 1 || d < 1) throw std::invalid_argument("L1 parameters must be positive");
    return {d, x, x + d, a, a + d, a + 2 * d, a + 3 * d, a + x, a + x + d, a + x + 2 * d, a + x + 3 * d};
}

std::vector<Element> L2_values(Element a, Element x, Element d) {
    if (a < 1 || x < 1 || d < 1) throw std::invalid_argument("L2 parameters must be positive");
    if (x <= a + 3 * d) throw std::invalid_argument("L2 needs x > a + 3d");
    return {d, x - d, x, a, a + d, a + 2 * d, a + 3 * d, x - a - 3 * d, x - a - 2 * d, x - a - d, x - a};
}

IntSet L1(Element a, Element x, Element d, Element n) { return set_from_values(L1_values(a, x, d), n, "L1"); }

IntSet L2(Element a, Element x, Element d, Element n) { return set_from_values(L2_values(a, x, d), n, "L2"); }

const char* pair_kind_name(PairKind k) { return k == PairKind::Plus ? "plus" : "minus"; }

std::array<Element, 2> pair_P(Element x, Element d, PairKind kind) {
    if (x < 1 || d < 1) throw std::invalid_argument("pair_P needs positive x and d");
    if (kind == PairKind::Plus) return {d, x + d};
    if (x <= d) throw std::invalid_argument("pair_P minus form needs x > d");
    if (x == 2 * d) throw std::invalid_argument("pair_P minus form degenerates at x = 2d");
    return {std::min(d, x - d), std::max(d, x - d)};
}

std::vector<PairPreimage> pair_preimages(Element u, Element v, Element n) {
    if (u > v) std::swap(u, v);
    if (u < 1 || u == v) throw std::invalid_argument("pair_preimages needs two distinct positive values");
    std::vector<PairPreimage> out{{v - u, u, PairKind::Plus}, {u + v, u, PairKind::Minus}, {u + v, v, PairKind::Minus}};
    if (n > 0) {
        std::erase_if(out, [&](const PairPreimage& p) { return p.x > n; });
    }
    return out;
}

PairPartition pair_partition(Element n, Element alpha) {
    if (alpha < 1 || alpha > n) {
        throw std::invalid_argument("alpha must lie in [1, n], got " + std::to_string(alpha));
    }
    PairPartition out;
    out.alpha = alpha;
    if (2 * alpha <= n) {
        const Element blocks = n / (2 * alpha);
        out.eta = 2 * alpha * blocks;
        for (Element j = 0; j < blocks; ++j) {
            for (Element i = 1; i <= alpha; ++i) {
                const Element lo = 2 * alpha * j + i;
                if (lo == alpha) continue;  // the degenerate pair {alpha, 2 alpha}
                out.pairs.push_back({lo, lo + alpha});
            }
        }
    } else {
        out.eta = alpha;
        for (Element i = 1; i + 1 <= alpha / 2; ++i) out.pairs.push_back({i, alpha - i});
    }
    out.Q = IntSet(std::max<Element>(out.eta, 1));
    for (const auto& p : out.pairs) {
        out.Q.insert(p[0]);
        out.Q.insert(p[1]);
    }
    out.small_eta = out.eta < 60;
    return out;
}

namespace {

std::vector<Element> parse_params(std::string_view text, std::size_t expected, std::string_view name) {
    std::vector<Element> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view tok = text.substr(pos, comma - pos);
        Element v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("malformed parameters in construction \"" + std::string(name) + "\"");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    if (out.size() != expected) {
        throw std::invalid_argument("construction \"" + std::string(name) + "\" expects " +
                                    std::to_string(expected) + " parameters");
    }
    return out;
}

Element need_n(Element n, std::string_view name) {
    if (n == 0) throw std::invalid_argument("construction \"" + std::string(name) + "\" needs a ground size n");
    return n;
}

}  // namespace

NamedConstruction resolve_construction(std::string_view name, Element n) {
    NamedConstruction out;
    out.name = std::string(name);
    const std::size_t colon = name.find(':');
    const std::string_view head = name.substr(0, colon);
    const std::string_view tail = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
    const bool has_params = colon != std::string_view::npos;

    if (!has_params && head == "odd") {
        out.set = odd_set(need_n(n, name));
    } else if (!has_params && head == "top") {
        out.set = top_interval(need_n(n, name));
    } else if (!has_params && head == "mod5") {
        auto m = mod5_construction(need_n(n, name));
        out.set = std::move(m.set);
        out.colouring = std::move(m.colouring);
    } else if (has_params && head == "dense0") {
        const auto p = parse_params(tail, 2, name);
        const auto d = dense_zero_statement(p[0], p[1]);
        out.set = n > p[0] ? d.A.regrounded(n) : d.A;
        out.colouring = d.colour(out.set);
    } else if (has_params && head == "sparse") {
        const auto p = parse_params(tail, 2, name);
        out.set = sparse_base(p[0], p[1]);
        if (n > p[0]) out.set = out.set.regrounded(n);
        out.base = out.set;
    } else if (has_params && (head == "L1" || head == "L2")) {
        const auto p = parse_params(tail, 3, name);
        out.set = head == "L1" ? L1(p[0], p[1], p[2], n) : L2(p[0], p[1], p[2], n);
    } else {
        throw std::invalid_argument("unknown construction \"" + std::string(name) + "\"");
    }
    return out;
}

}  // namespace schurlab
