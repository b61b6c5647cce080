#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fgq/word.hpp"

namespace fgq {

/// Total exponent of each generator; the image of a word under abelianization.
using ExponentVector = std::vector<std::int64_t>;

inline ExponentVector exponent_vector(const Word& w) {
    ExponentVector v(static_cast<std::size_t>(w.rank()), 0);
    for (const auto& s : w.syllables())
        v[static_cast<std::size_t>(s.gen)] = detail::checked_add(v[static_cast<std::size_t>(s.gen)], s.exp);
    return v;
}

class not_in_commutator_subgroup : public error {
public:
    explicit not_in_commutator_subgroup(const ExponentVector& v)
        : error("word is not in the commutator subgroup: exponent vector " + format(v)),
          exponents_(v) {}

    const ExponentVector& exponents() const { return exponents_; }

private:
    static std::string format(const ExponentVector& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ", ";
            s += std::to_string(v[i]);
        }
        return s + ")";
    }

    ExponentVector exponents_;
};

namespace detail {

inline void require_rank2(const Word& w, const char* where) {
    if (w.rank() != 2)
        throw error(std::string(where) + ": rank must be 2");
}

/// Per-word shoelace data: the signed area swept by the lattice path of w
/// started at the origin, plus the end displacement. Walking a = +x, b = +y,
/// only b-runs contribute, each x * exp with x the current abscissa.
struct PathData {
    std::int64_t area = 0;
    std::int64_t dx = 0;
    std::int64_t dy = 0;
};

inline PathData trace_path(const Word& w) {
    PathData d;
    for (const auto& s : w.syllables()) {
        if (s.gen == 0) {
            d.dx = checked_add(d.dx, s.exp);
        } else {
            d.area = checked_add(d.area, checked_mul(d.dx, s.exp));
            d.dy = checked_add(d.dy, s.exp);
        }
    }
    return d;
}

}  // namespace detail

/// The image of w in [F,F]/[[F,F],F] = Z, normalized so that [a,b] -> 1.
/// Computed as the signed area enclosed by the closed lattice path traced by
/// w in Z^2 (a = unit step +x, b = unit step +y). Requires a zero exponent
/// vector, i.e. w in [F,F].
inline std::int64_t area(const Word& w) {
    detail::require_rank2(w, "area");
    ExponentVector v = exponent_vector(w);
    if (v[0] != 0 || v[1] != 0)
        throw not_in_commutator_subgroup(v);
    return detail::trace_path(w).area;
}

/// Signed area of the closed path of the product w1^e1 w2^e2 ... evaluated
/// without materializing the product: a repeated block contributes
/// n*A + dy*(n*x0 + dx*n(n-1)/2) where (dx, dy, A) are single-copy data and
/// x0 the abscissa on entry. Exact for any exponents; O(total syllables of
/// the factor words), independent of the exponents.
inline std::int64_t area_of_power_product(std::span<const std::pair<Word, std::int64_t>> factors) {
    using detail::checked_add;
    using detail::checked_mul;
    std::int64_t x = 0, y = 0, total = 0;
    for (const auto& [w, e] : factors) {
        detail::require_rank2(w, "area_of_power_product");
        if (e == 0 || w.is_identity())
            continue;
        const Word u = e > 0 ? w : inv(w);
        const std::int64_t n = e > 0 ? e : detail::checked_neg(e);
        detail::PathData d = detail::trace_path(u);
        // sum_{i=0..n-1} (A + (x + i*dx) * dy)
        std::int64_t shift = checked_add(checked_mul(n, x),
                                         checked_mul(d.dx, n % 2 == 0 ? checked_mul(n / 2, n - 1)
                                                                      : checked_mul(n, (n - 1) / 2)));
        total = checked_add(total, checked_add(checked_mul(n, d.area), checked_mul(d.dy, shift)));
        x = checked_add(x, checked_mul(n, d.dx));
        y = checked_add(y, checked_mul(n, d.dy));
    }
    if (x != 0 || y != 0)
        throw not_in_commutator_subgroup(ExponentVector{x, y});
    return total;
}

/// Integer polynomial of degree <= 2 in two noncommuting variables X, Y;
/// products discard all terms of degree >= 3. The Magnus embedding sends
/// a -> 1+X and b -> 1+Y, so group-like elements have c0 = 1.
struct Series2 {
    std::int64_t c0 = 0;
    std::int64_t cx = 0, cy = 0;
    std::int64_t cxx = 0, cxy = 0, cyx = 0, cyy = 0;

    static Series2 one() { return Series2{1, 0, 0, 0, 0, 0, 0}; }

    friend bool operator==(const Series2&, const Series2&) = default;

    friend Series2 operator*(const Series2& u, const Series2& v) {
        using detail::checked_add;
        using detail::checked_mul;
        auto fma = [](std::int64_t acc, std::int64_t a, std::int64_t b) {
            return detail::checked_add(acc, detail::checked_mul(a, b));
        };
        Series2 r;
        r.c0 = checked_mul(u.c0, v.c0);
        r.cx = fma(checked_mul(u.c0, v.cx), u.cx, v.c0);
        r.cy = fma(checked_mul(u.c0, v.cy), u.cy, v.c0);
        r.cxx = fma(fma(checked_mul(u.c0, v.cxx), u.cx, v.cx), u.cxx, v.c0);
        r.cxy = fma(fma(checked_mul(u.c0, v.cxy), u.cx, v.cy), u.cxy, v.c0);
        r.cyx = fma(fma(checked_mul(u.c0, v.cyx), u.cy, v.cx), u.cyx, v.c0);
        r.cyy = fma(fma(checked_mul(u.c0, v.cyy), u.cy, v.cy), u.cyy, v.c0);
        return r;
    }
};

/// Truncated Magnus expansion of w: multiply out the letter images
/// a -> 1+X, a^-1 -> 1-X+XX, b -> 1+Y, b^-1 -> 1-Y+YY letter by letter.
inline Series2 magnus2(const Word& w) {
    detail::require_rank2(w, "magnus2");
    static const Series2 img[2][2] = {
        {Series2{1, 1, 0, 0, 0, 0, 0}, Series2{1, -1, 0, 1, 0, 0, 0}},   // a, a^-1
        {Series2{1, 0, 1, 0, 0, 0, 0}, Series2{1, 0, -1, 0, 0, 0, 1}},   // b, b^-1
    };
    Series2 r = Series2::one();
    for (const auto& s : w.syllables()) {
        const Series2& letter = img[s.gen][s.exp < 0];
        std::int64_t n = s.exp < 0 ? -s.exp : s.exp;
        for (std::int64_t i = 0; i < n; ++i)
            r = r * letter;
    }
    return r;
}

/// Independent oracle for area: for w in [F,F] the Magnus expansion is
/// 1 + c*(XY - YX) + higher order, and c equals the signed path area.
inline std::int64_t area_via_magnus(const Word& w) {
    detail::require_rank2(w, "area_via_magnus");
    ExponentVector v = exponent_vector(w);
    if (v[0] != 0 || v[1] != 0)
        throw not_in_commutator_subgroup(v);
    return magnus2(w).cxy;
}

/// |area(w)|: invariant of the Aut(F)-orbit of w in [F,F], because the
/// Aut(F)-action on [F,F]/[[F,F],F] is multiplication by det = +-1.
inline std::int64_t orbit_invariant(const Word& w) {
    std::int64_t s = area(w);
    return s < 0 ? detail::checked_neg(s) : s;
}

}  // namespace fgq
