#pragma once

/**
 * d-invariants (Heegaard Floer correction terms) of positive surgeries.
 *
 * Three engines, all exact:
 *
 *  - d_lens: the Ozsvath-Szabo recursion for lens spaces,
 *        d(L(g,h), i) = ((2i+1-g-h)^2 - gh) / (4gh) - d(L(h, g mod h), i mod h)
 *    with d(L(1,*), 0) = 0; depth is that of the Euclidean algorithm.
 *
 *  - d_integral: the large-surgery formula for an L-space knot K,
 *        d(K_n, i) = d(U_n, i) - 2 t_i(K),
 *    where d(U_n, i) = (n-2|i|)^2/(4n) - 1/4 and the spin-c index runs over
 *    the centered set { i : -n/2 < i <= n/2 }.
 *
 *  - d_rational: the Ni-Wu formula for a positive slope g/h,
 *        d(K_{g/h}, i) = d(L(g,h), i) - 2 max{ V_{floor(i/h)}, V_{-floor((i-g)/h)} },
 *    with 0 <= i <= g-1 and floors taken toward -infinity.
 *
 * The integral and rational formulas label spin-c structures differently; no
 * identification between the labelings is made here, and callers should rely
 * only on labeling-independent data (multisets, maxima, signs).  The two
 * routes agree as multisets at integral slopes.
 */

#include "integers.hpp"
#include "knot.hpp"
#include "rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfd {

/// A positive surgery slope g/h in lowest terms; integral n is n/1.
struct Slope {
    long long g = 1;
    long long h = 1;

    Slope() = default;
    Slope(long long num, long long den) : g(num), h(den) {
        if (g < 1 || h < 1) throw std::invalid_argument("Slope: must be positive");
        long long d = hfd::gcd(g, h);
        g /= d;
        h /= d;
    }

    bool is_integral() const { return h == 1; }

    /// "g/h", or bare "g" when integral.
    std::string str() const {
        return is_integral() ? std::to_string(g) : std::to_string(g) + "/" + std::to_string(h);
    }

    /// Accepts "g/h" or a bare integer "n".
    static Slope parse(std::string_view text) {
        auto bad = [&] { return std::invalid_argument("Slope: expected \"g/h\" or \"n\", got \"" +
                                                      std::string(text) + "\""); };
        auto digits = [&](std::string_view s) -> long long {
            if (s.empty() || s.size() > 18) throw bad();
            long long v = 0;
            for (char ch : s) {
                if (ch < '0' || ch > '9') throw bad();
                v = v * 10 + (ch - '0');
            }
            return v;
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Slope(digits(text), 1);
        return Slope(digits(text.substr(0, slash)), digits(text.substr(slash + 1)));
    }

    friend bool operator==(const Slope& a, const Slope& b) { return a.g == b.g && a.h == b.h; }
};

namespace detail {

inline Rational lens_rec(long long g, long long h, long long i) {
    if (g == 1) return Rational(0);
    Int num = Int(2) * i + 1 - g - h;
    num = num * num - Int(g) * h;
    return Rational(num, Int(4) * g * h) - lens_rec(h, g % h, i % h);
}

} // namespace detail

/// d(L(g,h), i).  h is reduced mod g first; requires gcd(g,h) = 1 and
/// 0 <= i <= g-1.
inline Rational d_lens(long long g, long long h, long long i) {
    if (g < 1 || h < 1) throw std::invalid_argument("d_lens: g and h must be >= 1");
    if (i < 0 || i >= g)
        throw std::invalid_argument("d_lens: spin-c index " + std::to_string(i) +
                                    " outside 0.." + std::to_string(g - 1));
    long long hr = h % g;
    if (g > 1 && hfd::gcd(g, hr) != 1)
        throw std::invalid_argument("d_lens: g and h must be coprime");
    return detail::lens_rec(g, g == 1 ? 1 : hr, i);
}

/// d(U_n, i) = (n-2|i|)^2/(4n) - 1/4 for the unknot; requires |i| <= n/2.
inline Rational d_unknot_surgery(long long n, long long i) {
    if (n < 1) throw std::invalid_argument("d_unknot_surgery: n must be >= 1");
    long long a = i < 0 ? -i : i;
    if (a > n - a)
        throw std::invalid_argument("d_unknot_surgery: |i| > n/2");
    Int num = Int(n) - 2 * a;
    return Rational(num * num, Int(4) * n) - Rational(1, 4);
}

/// d(K_n, i) = d(U_n, i) - 2 t_i(K) over the centered index set
/// { i : -n/2 < i <= n/2 }.
inline Rational d_integral(const KnotModel& K, long long n, long long i) {
    if (n < 1) throw std::invalid_argument("d_integral: n must be >= 1");
    if (Int(2) * i <= -Int(n) || Int(2) * i > n)
        throw std::invalid_argument("d_integral: spin-c index " + std::to_string(i) +
                                    " outside the canonical set -n/2 < i <= n/2");
    return d_unknot_surgery(n, i) - Rational(2 * K.torsion(i));
}

/// d(K_{g/h}, i) by the Ni-Wu formula; requires 0 <= i <= g-1.
inline Rational d_rational(const KnotModel& K, const Slope& slope, long long i) {
    if (i < 0 || i >= slope.g)
        throw std::invalid_argument("d_rational: spin-c index " + std::to_string(i) +
                                    " outside 0.." + std::to_string(slope.g - 1));
    Int v1 = K.V(floordiv(i, slope.h));
    Int v2 = K.V(-floordiv(i - slope.g, slope.h));
    return d_lens(slope.g, slope.h, i) - Rational(2 * std::max(v1, v2));
}

/// All g correction terms of K_{g/h}, indexed 0..g-1 in the Ni-Wu labeling.
struct DInvariantTable {
    std::string knot_label;
    Slope slope;
    std::vector<Rational> entries; // entries[i] = d(K_{g/h}, i)

    const Rational& max_d() const {
        if (entries.empty()) throw std::logic_error("DInvariantTable: empty");
        return *std::max_element(entries.begin(), entries.end());
    }
};

inline DInvariantTable table(const KnotModel& K, const Slope& slope) {
    DInvariantTable t;
    t.knot_label = K.label();
    t.slope = slope;
    t.entries.reserve(static_cast<std::size_t>(slope.g));
    for (long long i = 0; i < slope.g; ++i) t.entries.push_back(d_rational(K, slope, i));
    return t;
}

/// True iff g/h >= 2 genus(K) - 1, the slope range in which positive
/// surgery on an L-space knot is an L-space.
inline bool is_lspace_slope(const KnotModel& K, const Slope& slope) {
    return Int(slope.g) >= Int(slope.h) * (2 * K.genus() - 1);
}

} // namespace hfd
