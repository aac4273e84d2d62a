// Polynomial arithmetic over the prime field F_p, including deterministic
// factorization into monic irreducibles (squarefree split, then distinct-
// degree split, then equal-degree split with enumerated rather than random
// splitting elements, so output is reproducible run to run).
//
// All polynomials passing through here are kept in least-nonnegative-residue
// form; p is assumed prime throughout.
#ifndef MONOGEN_POLYNOMIAL_MOD_HPP
#define MONOGEN_POLYNOMIAL_MOD_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/polynomial.hpp"

namespace monogen {

namespace modp {

inline Int inv_mod(const Int& a, const Int& p) {
    Int r = powm(a % p, p - 2, p); // p prime
    if (r == 0) throw std::domain_error("inv_mod: not invertible");
    return r;
}

inline Polynomial add(const Polynomial& a, const Polynomial& b, const Int& p) {
    return (a + b).reduce_mod(p);
}

inline Polynomial sub(const Polynomial& a, const Polynomial& b, const Int& p) {
    return (a - b).reduce_mod(p);
}

inline Polynomial mul(const Polynomial& a, const Polynomial& b, const Int& p) {
    return (a * b).reduce_mod(p);
}

// f = quot * g + rem over F_p, deg(rem) < deg(g).
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g,
                                                const Int& p) {
    Polynomial gg = g.reduce_mod(p);
    if (gg.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    Int linv = inv_mod(gg.leading(), p);
    std::vector<Int> rem(f.reduce_mod(p).coefficients());
    const long gd = gg.degree();
    long fd = static_cast<long>(rem.size()) - 1;
    if (fd < gd) return {Polynomial{}, Polynomial(std::move(rem))};
    std::vector<Int> quot(static_cast<std::size_t>(fd - gd) + 1, Int(0));
    for (long k = fd; k >= gd; --k) {
        Int lead = rem[static_cast<std::size_t>(k)] % p;
        if (lead == 0) continue;
        Int factor = (lead * linv) % p;
        quot[static_cast<std::size_t>(k - gd)] = factor;
        for (long i = 0; i <= gd; ++i) {
            Int& slot = rem[static_cast<std::size_t>(k - gd + i)];
            slot = (slot - factor * gg.coeff(static_cast<std::size_t>(i))) % p;
            if (slot < 0) slot += p;
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem)).reduce_mod(p)};
}

inline Polynomial rem(const Polynomial& f, const Polynomial& g, const Int& p) {
    return divmod(f, g, p).second;
}

inline Polynomial make_monic(const Polynomial& f, const Int& p) {
    Polynomial ff = f.reduce_mod(p);
    if (ff.is_zero() || ff.leading() == 1) return ff;
    return (ff * inv_mod(ff.leading(), p)).reduce_mod(p);
}

// Monic gcd.
inline Polynomial gcd(Polynomial a, Polynomial b, const Int& p) {
    a = a.reduce_mod(p);
    b = b.reduce_mod(p);
    while (!b.is_zero()) {
        Polynomial r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

// base^e mod (modulus, p) by square and multiply.
inline Polynomial pow_mod(Polynomial base, Int e, const Polynomial& modulus, const Int& p) {
    Polynomial result = Polynomial::constant(1);
    base = rem(base, modulus, p);
    while (e > 0) {
        if (e % 2 == 1) result = rem(mul(result, base, p), modulus, p);
        base = rem(mul(base, base, p), modulus, p);
        e /= 2;
    }
    return result;
}

// p-th root of f when f = g(x)^p, i.e. f has support only at multiples of p.
// Over F_p the coefficients themselves are their own p-th roots.
inline Polynomial pth_root(const Polynomial& f, const Int& p) {
    std::size_t stride = static_cast<std::size_t>(to_uint64(p));
    std::vector<Int> out;
    for (std::size_t i = 0; i < f.coefficients().size(); i += stride) {
        out.push_back(f.coeff(i));
    }
    return Polynomial(std::move(out));
}

// Squarefree decomposition of monic f: list of (monic factor, multiplicity)
// with the factors pairwise coprime and individually squarefree.
inline std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& f,
                                                                             const Int& p) {
    std::vector<std::pair<Polynomial, unsigned>> out;
    Polynomial fp = f.derivative().reduce_mod(p);
    if (fp.is_zero()) {
        // f = g^p exactly
        for (auto& [h, e] : squarefree_decomposition(pth_root(f, p), p)) {
            out.emplace_back(h, e * static_cast<unsigned>(to_uint64(p)));
        }
        return out;
    }
    Polynomial c = gcd(f, fp, p);
    Polynomial w = divmod(f, c, p).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c, p);
        Polynomial z = divmod(w, y, p).first;
        if (z.degree() > 0) out.emplace_back(make_monic(z, p), i);
        ++i;
        w = std::move(y);
        c = divmod(c, w, p).first;
    }
    if (c.degree() > 0) {
        for (auto& [h, e] : squarefree_decomposition(pth_root(c, p), p)) {
            out.emplace_back(h, e * static_cast<unsigned>(to_uint64(p)));
        }
    }
    return out;
}

// Distinct-degree split of a monic squarefree f: list of (product of all
// irreducible factors of degree d, d), ascending in d.
inline std::vector<std::pair<Polynomial, unsigned>> distinct_degree_decomposition(Polynomial f,
                                                                                  const Int& p) {
    std::vector<std::pair<Polynomial, unsigned>> out;
    const Polynomial x{0, 1};
    Polynomial h = rem(x, f, p);
    unsigned d = 0;
    while (f.degree() >= 2 * static_cast<long>(d + 1)) {
        ++d;
        h = pow_mod(h, p, f, p);
        Polynomial g = gcd(sub(h, x, p), f, p);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divmod(f, g, p).first;
            h = rem(h, f, p);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

namespace detail {

// Enumerates F_p[x] polynomials of degree <= max_deg in a fixed order:
// index n written in base p gives the coefficients, low digit first.
inline Polynomial nth_polynomial(Int n, const Int& p) {
    std::vector<Int> coeffs;
    while (n > 0) {
        coeffs.push_back(n % p);
        n /= p;
    }
    return Polynomial(std::move(coeffs));
}

// Trace map h + h^2 + h^4 + ... (d terms) used for splitting over F_2.
inline Polynomial trace_map2(const Polynomial& h, unsigned d, const Polynomial& f, const Int& p) {
    Polynomial acc = rem(h, f, p);
    Polynomial power = acc;
    for (unsigned i = 1; i < d; ++i) {
        power = rem(mul(power, power, p), f, p);
        acc = add(acc, power, p);
    }
    return acc;
}

// Splits monic squarefree f, known to be a product of irreducibles all of
// degree d, into those irreducibles. Splitting elements are enumerated in a
// fixed order, so the recursion is deterministic.
inline void equal_degree_split(const Polynomial& f, unsigned d, const Int& p,
                               std::vector<Polynomial>& out) {
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    const Int exponent = p == 2 ? Int(0) : (pow(p, d) - 1) / 2;
    for (Int n = p /* skip constants */;; ++n) {
        Polynomial h = nth_polynomial(n, p);
        if (h.degree() >= f.degree()) h = rem(h, f, p);
        Polynomial g;
        if (p == 2) {
            g = gcd(trace_map2(h, d, f, p), f, p);
        } else {
            Polynomial t = pow_mod(h, exponent, f, p);
            g = gcd(sub(t, Polynomial::constant(1), p), f, p);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, p, out);
            equal_degree_split(divmod(f, g, p).first, d, p, out);
            return;
        }
    }
}

} // namespace detail

} // namespace modp

// Full factorization of f over F_p: f = unit * prod factors[i]^mult[i] with
// monic irreducible factors sorted by degree, then coefficientwise.
struct ModFactorization {
    Int unit = 1; // leading coefficient of f mod p
    std::vector<std::pair<Polynomial, unsigned>> factors;
};

inline ModFactorization factor_mod_p(const Polynomial& f, const Int& p) {
    if (p < 2) throw std::domain_error("factor_mod_p: modulus must be a prime >= 2");
    ModFactorization out;
    Polynomial ff = f.reduce_mod(p);
    if (ff.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial");
    out.unit = ff.leading();
    ff = modp::make_monic(ff, p);
    if (ff.degree() == 0) return out;
    for (const auto& [sqf, mult] : modp::squarefree_decomposition(ff, p)) {
        for (const auto& [grp, d] : modp::distinct_degree_decomposition(sqf, p)) {
            std::vector<Polynomial> irreducibles;
            modp::detail::equal_degree_split(grp, d, p, irreducibles);
            for (auto& irr : irreducibles) out.factors.emplace_back(std::move(irr), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

// Rabin irreducibility test for f over F_p.
inline bool is_irreducible_mod_p(const Polynomial& f, const Int& p) {
    Polynomial ff = modp::make_monic(f.reduce_mod(p), p);
    long n = ff.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Polynomial x{0, 1};
    // x^(p^(n/t)) != x mod f for every prime t | n, and x^(p^n) == x mod f.
    std::vector<long> prime_divisors;
    long rest = n;
    for (long t = 2; t * t <= rest; ++t) {
        if (rest % t == 0) {
            prime_divisors.push_back(t);
            while (rest % t == 0) rest /= t;
        }
    }
    if (rest > 1) prime_divisors.push_back(rest);
    for (long t : prime_divisors) {
        Polynomial h = modp::pow_mod(x, pow(p, static_cast<unsigned>(n / t)), ff, p);
        if (modp::gcd(modp::sub(h, x, p), ff, p).degree() != 0) return false;
    }
    Polynomial h = modp::pow_mod(x, pow(p, static_cast<unsigned>(n)), ff, p);
    return modp::sub(h, x, p).is_zero();
}

// First prime in the list modulo which f stays full-degree and irreducible.
// Absence is inconclusive: it never certifies reducibility over the rationals.
inline std::optional<Int> irreducible_mod_p_witness(const Polynomial& f,
                                                    const std::vector<Int>& primes) {
    if (f.degree() < 1 || !f.is_monic())
        throw std::domain_error("irreducible_mod_p_witness: f must be monic of degree >= 1");
    for (const Int& p : primes) {
        Polynomial ff = f.reduce_mod(p);
        if (ff.degree() != f.degree()) continue;
        if (is_irreducible_mod_p(ff, p)) return p;
    }
    return std::nullopt;
}

} // namespace monogen

#endif
