#pragma once

// Exact integer utilities shared by the whole library.  Everything downstream
// (d-invariants, thresholds, slope reduction) is computed over Int, an
// arbitrary-precision signed integer, so no overflow analysis is needed.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace hfd {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline long long gcd(long long a, long long b) { return std::gcd(a, b); }

/// Floor division toward -infinity; b must be positive.
inline long long floordiv(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("floordiv: divisor must be positive");
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

/// True iff no prime square divides n.  Trial division up to sqrt(n);
/// intended for desk-scale inputs (n up to ~10^6 in scans).
inline bool squarefree(long long n) {
    if (n < 1) throw std::invalid_argument("squarefree: argument must be >= 1");
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return false;
        }
    }
    return true;
}

} // namespace hfd
