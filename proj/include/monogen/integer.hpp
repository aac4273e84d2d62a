// Exact arbitrary-precision integer substrate and small numeric helpers.
// Everything downstream (polynomials, resultants, certificates) is built on
// the Int alias; no floating point is used anywhere in the library.
#ifndef MONOGEN_INTEGER_HPP
#define MONOGEN_INTEGER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monogen {

using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::pow;
using boost::multiprecision::powm;
using boost::multiprecision::sqrt; // integer square root (floor)

inline bool fits_uint64(const Int& n) {
    return n >= 0 && n <= Int(UINT64_MAX);
}

inline std::uint64_t to_uint64(const Int& n) {
    return static_cast<std::uint64_t>(n);
}

// Floor division (rounds toward negative infinity). cpp_int's operator/
// truncates toward zero, which is the wrong rounding for lattice counting.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Largest r with r^k <= n. Requires n >= 0, k >= 1.
inline Int kth_root_floor(const Int& n, unsigned k) {
    if (n < 0) throw std::domain_error("kth_root_floor: negative argument");
    if (k == 0) throw std::domain_error("kth_root_floor: k must be positive");
    if (k == 1 || n < 2) return n;
    if (k == 2) return sqrt(n);
    // Newton iteration on r -> ((k-1)r + n / r^(k-1)) / k, seeded from the
    // bit length so it converges from above.
    unsigned bits = static_cast<unsigned>(msb(n)) + 1;
    Int r = Int(1) << (bits / k + 1);
    while (true) {
        Int rk1 = pow(r, k - 1);
        Int next = ((k - 1) * r + n / rk1) / k;
        if (next >= r) break;
        r = next;
    }
    while (pow(r, k) > n) --r;
    while (pow(r + 1, k) <= n) ++r;
    return r;
}

// If n = b^k for some k >= 2, returns the base b for the LARGEST such k
// (so the base itself is not a perfect power). Returns 0 otherwise.
// Requires n >= 2.
inline Int perfect_power_base(const Int& n) {
    if (n < 4) return 0;
    unsigned max_k = static_cast<unsigned>(msb(n)) + 1;
    for (unsigned k = max_k; k >= 2; --k) {
        Int r = kth_root_floor(n, k);
        if (r >= 2 && pow(r, k) == n) return r;
    }
    return 0;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = sqrt(n);
    return r * r == n;
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

inline std::string dec(const Int& n) { return n.str(); }

} // namespace monogen

#endif
