// Integer factorization with an explicit effort budget.
//
// Running out of budget is not an error: the unfactored part is returned as a
// composite cofactor together with the bound below which it provably has no
// prime factor. Squarefree certification degrades accordingly (certified when
// the cofactor is 1, "no square divisor p^2 with p <= B" otherwise).
#ifndef MONOGEN_FACTOR_HPP
#define MONOGEN_FACTOR_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/primes.hpp"
#include "monogen/rational.hpp"

namespace monogen {

struct FactorBudget {
    std::uint64_t trial_bound = 1'000'000;   // trial division by all primes <= this
    std::uint64_t rho_iterations = 6'000'000; // Brent iteration cap per split attempt
};

struct FactoredInteger {
    int sign = 1;                      // -1, 0, or +1
    std::map<Int, unsigned> factors;   // prime -> exponent, exponents >= 1
    Int cofactor = 1;                  // part not factored within budget; 1 when complete
    Int cofactor_squarefree_bound = 1; // cofactor has no prime factor <= this

    bool complete() const { return cofactor == 1; }

    Int reconstruct() const {
        Int n = sign;
        for (const auto& [p, e] : factors) n *= pow(p, e);
        return n * cofactor;
    }
};

namespace detail {

inline std::uint64_t gcd_any(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
template <typename T>
T gcd_any(const T& a, const T& b) { return gcd(a, b); }

// Brent's cycle-finding variant of Pollard rho with batched gcds.
// Returns a nontrivial factor of the odd composite n, or 0 when the iteration
// cap runs out. Fully deterministic: x0 = 2, step x -> x^2 + c mod n.
template <typename U, typename Wide>
U brent_rho_typed(const U& n, unsigned c_shift, std::uint64_t cap) {
    const U c(c_shift);
    auto step = [&](const U& v) { return static_cast<U>((Wide(v) * v + c) % n); };
    U y(2), g(1), q(1), x(0), ys(0);
    std::uint64_t r = 1, used = 0;
    const std::uint64_t batch = 128;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r && used < cap; ++i, ++used) y = step(y);
        if (used >= cap) return U(0);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t lim = std::min(batch, r - k);
            std::uint64_t done = 0;
            for (; done < lim && used < cap; ++done, ++used) {
                y = step(y);
                U diff = x > y ? static_cast<U>(x - y) : static_cast<U>(y - x);
                q = static_cast<U>((Wide(q) * diff) % n);
            }
            g = gcd_any(q, n);
            if (done < lim && g == 1) return U(0);
            k += lim;
        }
        r *= 2;
    }
    if (g == n) {
        // Batch overshot: redo the last segment one gcd at a time.
        do {
            ys = step(ys);
            U diff = x > ys ? static_cast<U>(x - ys) : static_cast<U>(ys - x);
            g = gcd_any(diff, n);
        } while (g == 1);
    }
    return g == n ? U(0) : g;
}

// Tries shifts c = 1, 2, 3, each within the iteration cap; picks the integer
// width that fits n. Returns a nontrivial factor or 0.
inline Int rho_split(const Int& n, std::uint64_t cap) {
    namespace mp = boost::multiprecision;
    for (unsigned c = 1; c <= 3; ++c) {
        Int g = 0;
        if (fits_uint64(n)) {
            std::uint64_t f =
                brent_rho_typed<std::uint64_t, unsigned __int128>(to_uint64(n), c, cap);
            g = f;
        } else if (msb(n) < 128) {
            mp::uint128_t f = brent_rho_typed<mp::uint128_t, mp::uint256_t>(
                static_cast<mp::uint128_t>(n), c, cap);
            g = Int(f);
        } else {
            g = brent_rho_typed<Int, Int>(n, c, cap);
        }
        if (g > 1 && g < n) return g;
    }
    return 0;
}

} // namespace detail

inline FactoredInteger factorize(const Int& n, const FactorBudget& budget = {}) {
    if (n == 0) throw std::domain_error("factorize: input must be nonzero");
    FactoredInteger out;
    out.sign = n < 0 ? -1 : 1;
    out.cofactor_squarefree_bound = Int(budget.trial_bound);
    Int rest = abs(n);

    for (std::uint64_t p : primes_below(budget.trial_bound + 1)) {
        if (rest == 1) break;
        if (Int(p) * p > rest) break; // rest is prime; resolved below
        unsigned e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        if (e) out.factors[Int(p)] = e;
    }
    if (rest == 1) return out;

    // Split the remaining part, which has no prime factor <= trial_bound.
    // Entries that resist rho are kept aside; the loop reruns cheap reductions
    // (primality, perfect powers, division by newly found primes, pairwise
    // gcds) until nothing changes, so the final cofactor is coprime to every
    // listed prime.
    struct Pending { Int value; unsigned mult; bool rho_failed; };
    std::vector<Pending> pending{{rest, 1, false}};
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Pending> next;
        for (auto& item : pending) {
            Int v = item.value;
            unsigned mult = item.mult;
            for (const auto& [p, e] : out.factors) {
                if (p <= budget.trial_bound) continue;
                while (v % p == 0) { v /= p; out.factors[p] += mult; changed = true; }
            }
            if (v == 1) { changed = true; continue; }
            if (is_prime(v)) {
                out.factors[v] += mult;
                changed = true;
                continue;
            }
            Int base = perfect_power_base(v);
            if (base != 0) {
                unsigned k = 1;
                Int t = base;
                while (t < v) { t *= base; ++k; }
                next.push_back({base, mult * k, false});
                changed = true;
                continue;
            }
            if (!item.rho_failed) {
                Int d = detail::rho_split(v, budget.rho_iterations);
                if (d != 0) {
                    next.push_back({d, mult, false});
                    next.push_back({v / d, mult, false});
                    changed = true;
                    continue;
                }
            }
            next.push_back({v, mult, true});
        }
        // Pairwise gcds can crack two resistant composites sharing a prime.
        for (std::size_t i = 0; i + 1 < next.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < next.size() && !changed; ++j) {
                Int g = gcd(next[i].value, next[j].value);
                if (g > 1) {
                    Int a = next[i].value / g, b = next[j].value / g;
                    unsigned mi = next[i].mult, mj = next[j].mult;
                    next.erase(next.begin() + j);
                    next.erase(next.begin() + i);
                    next.push_back({g, mi + mj, false});
                    if (a != 1) next.push_back({a, mi, false});
                    if (b != 1) next.push_back({b, mj, false});
                    changed = true;
                }
            }
        }
        pending = std::move(next);
    }
    for (const auto& item : pending) out.cofactor *= pow(item.value, item.mult);
    return out;
}

inline unsigned padic_valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::domain_error("padic_valuation: valuation of zero is undefined");
    if (p < 2) throw std::domain_error("padic_valuation: p must be at least 2");
    unsigned k = 0;
    Int v = n;
    while (v % p == 0) { v /= p; ++k; }
    return k;
}

// nu_p of a rational: nu_p(num) - nu_p(den). Can be negative.
inline long padic_valuation(const Rational& r, const Int& p) {
    if (r == 0) throw std::domain_error("padic_valuation: valuation of zero is undefined");
    return static_cast<long>(padic_valuation(numerator(r), p)) -
           static_cast<long>(padic_valuation(denominator(r), p));
}

template <std::integral T>
unsigned padic_valuation(T n, const Int& p) {
    return padic_valuation(Int(n), p);
}

// Resolve boost expression templates (e.g. padic_valuation(a * b, p)) to the
// overload for the expression's value type.
template <typename Tag, typename A1, typename A2, typename A3, typename A4>
auto padic_valuation(const boost::multiprecision::detail::expression<Tag, A1, A2, A3, A4>& e,
                     const Int& p) {
    using R = typename boost::multiprecision::detail::expression<Tag, A1, A2, A3, A4>::result_type;
    return padic_valuation(R(e), p);
}

// Partition by exponent: primes with exponent >= 2 (kept at full exponent)
// versus exponent-1 primes. The squarefull part is always positive; the sign
// and any unfactored cofactor ride on the squarefree part, whose bound field
// flags that its squarefree-ness is only certified up to the bound.
inline std::pair<FactoredInteger, FactoredInteger> squarefull_split(const FactoredInteger& f) {
    if (f.sign == 0) throw std::domain_error("squarefull_split: zero input");
    FactoredInteger full, free;
    full.sign = 1;
    free.sign = f.sign;
    full.cofactor_squarefree_bound = f.cofactor_squarefree_bound;
    free.cofactor_squarefree_bound = f.cofactor_squarefree_bound;
    free.cofactor = f.cofactor;
    for (const auto& [p, e] : f.factors) {
        if (e >= 2) full.factors[p] = e;
        else free.factors[p] = e;
    }
    return {std::move(full), std::move(free)};
}

struct SquarefreeStatus {
    enum class Kind { yes, no, yes_up_to_bound };
    Kind kind;
    Int bound = 0; // meaningful for yes_up_to_bound

    bool certified() const { return kind != Kind::yes_up_to_bound; }
    bool possibly_squarefree() const { return kind != Kind::no; }
};

inline SquarefreeStatus squarefree_status(const FactoredInteger& f) {
    for (const auto& [p, e] : f.factors) {
        if (e >= 2) return {SquarefreeStatus::Kind::no};
    }
    if (f.cofactor == 1) return {SquarefreeStatus::Kind::yes};
    if (is_perfect_square(f.cofactor)) return {SquarefreeStatus::Kind::no};
    // The cofactor has no prime factor <= B and is coprime to the listed
    // primes. Below B^3 a non-square composite must be a product of two
    // distinct primes, so squarefree-ness is still certain.
    const Int& b = f.cofactor_squarefree_bound;
    if (f.cofactor < b * b * b) return {SquarefreeStatus::Kind::yes};
    return {SquarefreeStatus::Kind::yes_up_to_bound, b};
}

inline SquarefreeStatus is_squarefree(const Int& n, const FactorBudget& budget = {}) {
    return squarefree_status(factorize(n, budget));
}

// Product of two factored values. Exponents add; cofactors multiply, and the
// certified bound drops to the weaker of the two.
inline FactoredInteger multiply(const FactoredInteger& a, const FactoredInteger& b) {
    FactoredInteger out;
    out.sign = a.sign * b.sign;
    if (out.sign == 0) throw std::domain_error("multiply: zero operand");
    out.factors = a.factors;
    for (const auto& [p, e] : b.factors) out.factors[p] += e;
    out.cofactor = a.cofactor * b.cofactor;
    out.cofactor_squarefree_bound =
        std::min(a.cofactor_squarefree_bound, b.cofactor_squarefree_bound);
    return out;
}

} // namespace monogen

#endif
