// Primality testing and prime enumeration.
//
// is_prime is deterministic for every n below 3,317,044,064,679,887,385,961,981
// (~3.3e24): a 64-bit Miller-Rabin fast path with the first twelve prime
// bases, and the first thirteen prime bases above 64 bits (Sorenson-Webster
// witness set). Beyond that bound the same bases are combined with a strong
// Lucas test (Baillie-style); no counterexample to that combination is known,
// and nothing in this library requires certified primality at that size.
#ifndef MONOGEN_PRIMES_HPP
#define MONOGEN_PRIMES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "monogen/integer.hpp"

namespace monogen {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = m > 1 ? 1 : 0;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// One Miller-Rabin round; n odd, n > 2, d * 2^s = n - 1 with d odd.
inline bool mr_round_u64(std::uint64_t n, std::uint64_t d, int s, std::uint64_t base) {
    base %= n;
    if (base == 0) return true;
    std::uint64_t x = powmod_u64(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!mr_round_u64(n, d, s, base)) return false;
    }
    return true;
}

inline bool mr_round(const Int& n, const Int& d, int s, const Int& base) {
    Int b = base % n;
    if (b == 0) return true;
    Int x = powm(b, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Jacobi symbol (a/n) for odd n > 0.
inline int jacobi(Int a, Int n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: n must be positive odd");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
// n odd, > 2, not a perfect square, with no small prime factors.
inline bool strong_lucas(const Int& n) {
    Int d_param = 5;
    while (true) {
        int j = jacobi(d_param, n);
        if (j == 0) return false; // shares a factor with n
        if (j == -1) break;
        d_param = d_param > 0 ? Int(-(d_param + 2)) : Int(-(d_param - 2));
    }
    // P = 1, Q = (1 - D) / 4
    Int q_param = (1 - d_param) / 4;
    Int d = n + 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }

    auto mod = [&](Int v) {
        v %= n;
        if (v < 0) v += n;
        return v;
    };
    // Binary ladder for U_d, V_d (Q^k tracked alongside).
    Int u = 1, v = 1, qk = mod(q_param);
    Int inv2 = (n + 1) / 2; // 2^-1 mod n for odd n
    unsigned top = static_cast<unsigned>(msb(d));
    for (int i = static_cast<int>(top) - 1; i >= 0; --i) {
        // double: U_{2k} = U_k V_k, V_{2k} = V_k^2 - 2 Q^k
        u = mod(u * v);
        v = mod(v * v - 2 * qk);
        qk = mod(qk * qk);
        if (bit_test(d, static_cast<unsigned>(i))) {
            // increment: U_{k+1} = (U_k + V_k)/2, V_{k+1} = (D U_k + V_k)/2
            Int u1 = mod(mod(u + v) * inv2);
            Int v1 = mod(mod(d_param * u + v) * inv2);
            u = u1;
            v = v1;
            qk = mod(qk * q_param);
        }
    }
    if (u == 0 || v == 0) return true;
    for (int r = 1; r < s; ++r) {
        v = mod(v * v - 2 * qk);
        if (v == 0) return true;
        qk = mod(qk * qk);
    }
    return false;
}

// Deterministic below this bound with the first 13 prime bases.
inline const Int& mr13_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

} // namespace detail

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (fits_uint64(n)) return detail::is_prime_u64(to_uint64(n));
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (int base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (!detail::mr_round(n, d, s, base)) return false;
    }
    if (n < detail::mr13_bound()) return true;
    if (is_perfect_square(n)) return false;
    return detail::strong_lucas(n);
}

// Smallest prime strictly greater than n.
inline Int next_prime(Int n) {
    if (n < 2) return 2;
    ++n;
    if (n % 2 == 0) {
        if (n == 2) return 2;
        ++n;
    }
    while (!is_prime(n)) n += 2;
    return n;
}

// All primes < bound, by sieve of Eratosthenes.
inline std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound <= 2) return primes;
    std::vector<bool> composite(bound, false);
    for (std::uint64_t i = 2; i < bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
    }
    return primes;
}

// Smallest prime >= start in the class residue (mod modulus).
// Requires gcd(residue, modulus) = 1; a class sharing a factor with the
// modulus contains at most one prime and is rejected.
inline Int find_prime_in_class(const Int& modulus, const Int& residue, const Int& start) {
    if (modulus < 1) throw std::domain_error("find_prime_in_class: modulus must be positive");
    if (gcd(residue, modulus) != 1)
        throw std::domain_error("find_prime_in_class: no primes in class, gcd(residue, modulus) != 1");
    Int r = residue % modulus;
    if (r < 0) r += modulus;
    Int candidate = start;
    if (candidate < 2) candidate = 2;
    Int offset = (r - candidate) % modulus;
    if (offset < 0) offset += modulus;
    candidate += offset;
    while (!is_prime(candidate)) candidate += modulus;
    return candidate;
}

} // namespace monogen

#endif
