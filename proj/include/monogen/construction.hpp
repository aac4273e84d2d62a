// The prime-product construction: parameter validation, the polynomials
// a, b, G, F0, F, the shifted-evaluation constants C_i / D_j, the closed-form
// discriminant identity, local solubility witnesses, the density constant,
// admissible-prime search, and the monogenicity certificate that ties the
// chain together.
//
// Everything is exact. The chain proves only the positive direction: a
// certificate is "monogenic" when every link certifies, and "inconclusive"
// otherwise (never "non-monogenic").
#ifndef MONOGEN_CONSTRUCTION_HPP
#define MONOGEN_CONSTRUCTION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monogen/factor.hpp"
#include "monogen/integer.hpp"
#include "monogen/polynomial.hpp"
#include "monogen/primes.hpp"
#include "monogen/rational.hpp"
#include "monogen/resultant.hpp"

namespace monogen {

// An internal identity of the construction failed to verify. Must never fire
// on validated parameters; firing falsifies the construction (or the engine).
struct ConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParamViolation {
    std::string condition;
    std::string detail;
};

struct ConstructionParams {
    Int q0, q1, q;
    unsigned d = 1;
    Int m, q2;
    std::optional<Int> p;
    std::vector<Int> m_primes; // ascending prime divisors of m (empty for m = 1)
};

struct ParamValidation {
    std::optional<ConstructionParams> params;
    std::vector<ParamViolation> violations;
    bool ok() const { return params.has_value(); }
};

inline ParamValidation validate_params(const Int& q0, const Int& q1, const Int& q, unsigned d,
                                       const Int& m, const Int& q2,
                                       const std::optional<Int>& p = std::nullopt,
                                       const FactorBudget& budget = {}) {
    ParamValidation result;
    auto fail = [&](std::string condition, std::string detail) {
        result.violations.push_back({std::move(condition), std::move(detail)});
    };
    if (!is_prime(q0)) fail("q0 prime", dec(q0) + " is not prime");
    if (!is_prime(q1)) fail("q1 prime", dec(q1) + " is not prime");
    if (q0 >= q1) fail("q0 < q1", dec(q0) + " >= " + dec(q1));
    if (!is_prime(q)) fail("q prime", dec(q) + " is not prime");
    if (q != q0 + q1 - 1) fail("q = q0 + q1 - 1", dec(q) + " != " + dec(Int(q0 + q1 - 1)));
    if (d < 1) fail("d >= 1", "d = " + std::to_string(d));
    std::vector<Int> m_primes;
    if (m < 1) {
        fail("m >= 1", "m = " + dec(m));
    } else if (m > 1) {
        auto fm = factorize(m, budget);
        auto status = squarefree_status(fm);
        if (status.kind == SquarefreeStatus::Kind::no) {
            fail("m squarefree", "m = " + dec(m) + " has a square divisor");
        } else if (!fm.complete()) {
            fail("m squarefree", "m = " + dec(m) +
                                     " has an unfactored part; squarefreeness not certified "
                                     "within the factorization budget");
        } else {
            for (const auto& [r, e] : fm.factors) m_primes.push_back(r);
        }
        if (m % q == 0) fail("q does not divide m", dec(q) + " | " + dec(m));
    }
    if (d >= 1) {
        Int upper = Int(d) * (q - 1) + 1; // primes r with q < r < d(q-1)+1 must divide m
        for (Int r = next_prime(q); r < upper; r = next_prime(r)) {
            if (m % r != 0)
                fail("range prime divides m",
                     "prime " + dec(r) + " lies in (" + dec(q) + ", " + dec(upper) +
                         ") but does not divide m = " + dec(m));
        }
    }
    if (!is_prime(q2)) fail("q2 prime", dec(q2) + " is not prime");
    if ((q2 + 1) % q != 0) fail("q2 = -1 mod q", dec(q2) + " mod " + dec(q) + " != " + dec(Int(q - 1)));
    if (p) {
        if (!is_prime(*p)) fail("p prime", dec(*p) + " is not prime");
        if (*p <= m) fail("p > m", dec(*p) + " <= " + dec(m));
        if (*p == q) fail("p != q", "p = q = " + dec(q));
    }
    if (result.violations.empty()) {
        ConstructionParams params;
        params.q0 = q0;
        params.q1 = q1;
        params.q = q;
        params.d = d;
        params.m = m;
        params.q2 = q2;
        params.p = p;
        params.m_primes = std::move(m_primes);
        result.params = std::move(params);
    }
    return result;
}

struct ConstructionPolynomials {
    Polynomial a, b, G, F0;
    Int shift; // m * (q-1)!; the roots of a are -i*q2*shift, of b are -j*shift
};

inline ConstructionPolynomials build_construction(const ConstructionParams& P) {
    ConstructionPolynomials out;
    out.shift = P.m * factorial(static_cast<unsigned>(to_uint64(P.q - 1)));
    std::vector<Int> a_shifts, b_shifts;
    for (Int i = 1; i < P.q0; ++i) a_shifts.push_back(i * P.q2 * out.shift);
    for (Int j = 1; j < P.q1; ++j) b_shifts.push_back(j * out.shift);
    out.a = linear_product(a_shifts);
    out.b = linear_product(b_shifts);
    out.G = out.a * out.b * P.q;
    try {
        out.F0 = out.G.antiderivative_from_zero();
    } catch (const NonIntegralAntiderivative& e) {
        throw ConstructionError(
            "antiderivative integrality failed at degree " + std::to_string(e.offending_degree) +
            "; the construction guarantees integer coefficients");
    }
    return out;
}

struct CDValues {
    std::vector<Int> C; // length q0 - 1
    std::vector<Int> D; // length q1 - 1
};

namespace detail {

inline Int mod_least(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

} // namespace detail

inline CDValues compute_cd(const ConstructionParams& P, const ConstructionPolynomials& built) {
    CDValues cd;
    auto shifted_value = [&](const Int& point, const char* label, const Int& index) {
        Int value = built.F0.evaluate(point);
        if (value % P.m != 0)
            throw ConstructionError("m does not divide F0 at the " + std::string(label) +
                                    " point with index " + dec(index));
        return Int(value / P.m);
    };
    for (Int i = 1; i < P.q0; ++i) {
        cd.C.push_back(shifted_value(-(i * P.q2 * built.shift), "C", i));
        if (detail::mod_least(cd.C.back() - i * P.q2, P.q) != 0)
            throw ConstructionError("C_" + dec(i) + " != i*q2 mod q");
        if (cd.C.back() % P.m != 0)
            throw ConstructionError("C_" + dec(i) + " is not divisible by m");
    }
    for (Int j = 1; j < P.q1; ++j) {
        cd.D.push_back(shifted_value(-(j * built.shift), "D", j));
        if (detail::mod_least(cd.D.back() - j, P.q) != 0)
            throw ConstructionError("D_" + dec(j) + " != j mod q");
        if (cd.D.back() % P.m != 0)
            throw ConstructionError("D_" + dec(j) + " is not divisible by m");
    }
    std::set<Int> seen;
    for (const Int& v : cd.C)
        if (!seen.insert(v).second) throw ConstructionError("C values are not distinct");
    for (const Int& v : cd.D)
        if (!seen.insert(v).second)
            throw ConstructionError("D values are not distinct from each other and from C");
    return cd;
}

inline Polynomial assemble_F(const ConstructionParams& P, const ConstructionPolynomials& built) {
    if (!P.p) throw std::domain_error("assemble_F: params.p is required");
    Polynomial F = built.F0 + Polynomial::constant(P.q * P.m * pow(*P.p, P.d));
    if (!F.is_eisenstein(P.q))
        throw ConstructionError("F is not Eisenstein with respect to q = " + dec(P.q));
    for (const Int& r : P.m_primes)
        if (!F.is_eisenstein(r))
            throw ConstructionError("F is not Eisenstein with respect to the divisor " + dec(r) +
                                    " of m");
    return F;
}

struct IdentityCheck {
    Int lhs = 0;  // |discriminant(F)| from the resultant engine
    Int rhs = 0;  // q^q * m^(q-1) * prod |q p^d + C_i| * prod |q p^d + D_j|
    bool equal = false;
    int discriminant_sign = 1;
};

inline IdentityCheck discriminant_identity_check(const ConstructionParams& P, const Polynomial& F,
                                                 const CDValues& cd) {
    if (!P.p) throw std::domain_error("discriminant_identity_check: params.p is required");
    IdentityCheck check;
    Int disc = discriminant(F);
    check.discriminant_sign = disc < 0 ? -1 : 1;
    check.lhs = abs(disc);
    Int qpd = P.q * pow(*P.p, P.d);
    check.rhs = pow(P.q, static_cast<unsigned>(to_uint64(P.q))) *
                pow(P.m, static_cast<unsigned>(to_uint64(P.q - 1)));
    for (const Int& c : cd.C) check.rhs *= abs(qpd + c);
    for (const Int& dv : cd.D) check.rhs *= abs(qpd + dv);
    check.equal = check.lhs == check.rhs;
    return check;
}

struct FPolynomial {
    Polynomial f;                   // product of the factors, degree d(q-1)
    std::vector<Polynomial> factors; // q x^d + C_1, ..., then q x^d + D_1, ...
};

inline FPolynomial build_f_product(const ConstructionParams& P, const CDValues& cd) {
    FPolynomial out;
    auto push_factor = [&](const Int& v) {
        std::vector<Int> coeffs(P.d + 1, Int(0));
        coeffs[0] = v;
        coeffs[P.d] = P.q;
        out.factors.emplace_back(coeffs);
        if (!out.factors.back().reciprocal().is_eisenstein(P.q))
            throw ConstructionError("reciprocal of a factor of f is not q-Eisenstein");
    };
    for (const Int& c : cd.C) push_factor(c);
    for (const Int& dv : cd.D) push_factor(dv);
    for (std::size_t i = 0; i < out.factors.size(); ++i)
        for (std::size_t j = i + 1; j < out.factors.size(); ++j)
            if (out.factors[i] == out.factors[j])
                throw ConstructionError("duplicate factor in f; the shifted values collide");
    out.f = Polynomial::constant(1);
    for (const Polynomial& h : out.factors) out.f = out.f * h;
    if (out.f.degree() != static_cast<long>(P.d) * static_cast<long>(to_uint64(P.q - 1)))
        throw ConstructionError("f has the wrong degree");
    return out;
}

namespace detail {

// Reduce f mod r^2 and evaluate at every unit z, feeding each value to visit;
// visit returns false to stop early. Uses 64-bit arithmetic when r^2 < 2^32.
template <typename Visit>
void scan_units_mod_r2(const Polynomial& f, const Int& r, Visit visit) {
    Int r2 = r * r;
    if (r2 < (Int(1) << 32)) {
        std::uint64_t n = to_uint64(r2);
        std::uint64_t rv = to_uint64(r);
        Polynomial reduced = f.reduce_mod(r2);
        std::vector<std::uint64_t> coeffs;
        for (const Int& c : reduced.coefficients()) coeffs.push_back(to_uint64(c));
        for (std::uint64_t z = 1; z < n; ++z) {
            if (z % rv == 0) continue;
            std::uint64_t acc = 0;
            for (std::size_t k = coeffs.size(); k-- > 0;) acc = (acc * z + coeffs[k]) % n;
            if (!visit(Int(z), acc == 0)) return;
        }
        return;
    }
    Polynomial reduced = f.reduce_mod(r2);
    for (Int z = 1; z < r2; ++z) {
        if (z % r == 0) continue;
        Int acc = 0;
        for (std::size_t k = reduced.coefficients().size(); k-- > 0;)
            acc = (acc * z + reduced.coefficients()[k]) % r2;
        if (!visit(z, acc == 0)) return;
    }
}

} // namespace detail

struct SolubilityWitness {
    Int r;
    Int z;               // unit mod r^2 with f(z) != 0 mod r^2, smallest by scan
    int case_id = 0;     // 1: r < q; 2: r = q; 3: q < r <= d(q-1)+1; 4: larger
    bool case_prediction_ok = false; // cases 1 and 3 predict z = 1; checked directly
};

inline SolubilityWitness local_solubility_witness(const ConstructionParams& P, const Polynomial& f,
                                                  const Int& r) {
    if (!is_prime(r)) throw std::domain_error("local_solubility_witness: r must be prime");
    SolubilityWitness witness;
    witness.r = r;
    if (r < P.q)
        witness.case_id = 1;
    else if (r == P.q)
        witness.case_id = 2;
    else if (r <= Int(P.d) * (P.q - 1) + 1)
        witness.case_id = 3;
    else
        witness.case_id = 4;
    // z = 1 is the first unit scanned, so one early-exit pass tells us both
    // the smallest witness and whether the z = 1 prediction held.
    std::optional<Int> found;
    bool one_works = false;
    detail::scan_units_mod_r2(f, r, [&](const Int& z, bool is_root) {
        if (!is_root) {
            if (z == 1) one_works = true;
            found = z;
            return false;
        }
        return true;
    });
    if (!found)
        throw ConstructionError("no local solubility witness modulo " + dec(r) +
                                "^2; the construction is falsified");
    witness.z = *found;
    witness.case_prediction_ok =
        (witness.case_id == 1 || witness.case_id == 3) ? (*found == 1 && one_works) : true;
    return witness;
}

struct DensityFactor {
    Int r;
    Int rho;         // #{units z mod r^2 : f(z) = 0 mod r^2}
    Rational factor; // 1 - rho / (r (r-1))
};

struct DensityReport {
    Int prime_bound;
    std::vector<DensityFactor> factors;
    Rational partial_product = 1;
    std::optional<Int> zero_factor_at; // first prime whose factor vanishes
};

inline DensityReport density_constant(const Polynomial& f, const Int& prime_bound) {
    if (prime_bound < 2) throw std::domain_error("density_constant: prime_bound must be >= 2");
    DensityReport report;
    report.prime_bound = prime_bound;
    for (std::uint64_t rv : primes_below(to_uint64(prime_bound) + 1)) {
        Int r(rv);
        Int rho = 0;
        detail::scan_units_mod_r2(f, r, [&](const Int&, bool is_root) {
            if (is_root) ++rho;
            return true;
        });
        Int unit_count = r * (r - 1);
        DensityFactor entry;
        entry.r = r;
        entry.rho = rho;
        entry.factor = Rational(1) - Rational(rho, unit_count);
        if (rho == unit_count && !report.zero_factor_at) report.zero_factor_at = r;
        report.partial_product *= entry.factor;
        report.factors.push_back(std::move(entry));
    }
    return report;
}

struct AdmissiblePrime {
    Int p;
    SquarefreeStatus status; // of f(p), from budgeted factorization
    bool coprime_ok = true;  // gcd(qm, factor value) = 1 for every factor
};

// Factor f(p) one factor value at a time and merge: the values are far
// smaller than their product, and shared primes surface as exponent >= 2.
inline FactoredInteger factor_variable_part(const FPolynomial& fp, const Int& p,
                                            const FactorBudget& budget) {
    FactoredInteger merged;
    for (const Polynomial& h : fp.factors)
        merged = multiply(merged, factorize(h.evaluate(p), budget));
    return merged;
}

inline std::vector<AdmissiblePrime> search_admissible_prime(const ConstructionParams& P,
                                                            const FPolynomial& fp, const Int& limit,
                                                            const FactorBudget& budget = {}) {
    std::vector<AdmissiblePrime> hits;
    auto screen_primes = primes_below(1000);
    for (Int p = next_prime(P.m); p <= limit; p = next_prime(p)) {
        if (p == P.q) continue;
        std::vector<Int> values;
        bool coprime = true;
        for (const Polynomial& h : fp.factors) {
            values.push_back(h.evaluate(p));
            if (gcd(P.q * P.m, values.back()) != 1) coprime = false;
        }
        if (!coprime) continue;
        Int product = 1;
        for (const Int& v : values) product *= v;
        bool small_square = false;
        for (std::uint64_t rv : screen_primes) {
            if (product % (Int(rv) * rv) == 0) {
                small_square = true;
                break;
            }
        }
        if (small_square) continue;
        auto merged = factor_variable_part(fp, p, budget);
        auto status = squarefree_status(merged);
        if (status.kind == SquarefreeStatus::Kind::no) continue;
        hits.push_back({p, status, true});
    }
    return hits;
}

enum class MonogenicVerdict { monogenic, inconclusive };

inline const char* to_string(MonogenicVerdict v) {
    return v == MonogenicVerdict::monogenic ? "monogenic" : "inconclusive";
}

struct MonogenicityCertificate {
    ConstructionParams params;
    Polynomial F;
    FactoredInteger delta;   // factorization of Delta(F); sign is the true sign
    Int delta_value = 0;     // signed Delta(F)
    Int variable_part = 0;   // f(p); |Delta(F)| = q^q m^(q-1) |f(p)|
    std::set<Int> eisenstein_primes;
    bool identity_checked = false;
    SquarefreeStatus variable_squarefree;
    bool variable_coprime_qm = false;
    MonogenicVerdict verdict = MonogenicVerdict::inconclusive;
    std::string failing_link;            // empty iff verdict is monogenic
    bool omega_substituted_for_m = true; // the source states the modulus with an
                                         // undefined omega; m is used throughout
};

inline MonogenicityCertificate certify_monogenic(const ConstructionParams& P,
                                                 const FactorBudget& budget = {}) {
    if (!P.p) throw std::domain_error("certify_monogenic: params.p is required");
    MonogenicityCertificate cert;
    cert.params = P;
    std::string link = "build";
    try {
        auto built = build_construction(P);
        link = "cd-values";
        auto cd = compute_cd(P, built);
        link = "eisenstein";
        cert.F = assemble_F(P, built);
        cert.eisenstein_primes.insert(P.q);
        for (const Int& r : P.m_primes) cert.eisenstein_primes.insert(r);
        link = "identity";
        auto check = discriminant_identity_check(P, cert.F, cd);
        cert.identity_checked = check.equal;
        cert.delta_value = check.discriminant_sign * check.lhs;
        link = "f-product";
        auto fp = build_f_product(P, cd);
        cert.variable_part = fp.f.evaluate(*P.p);
        link = "coprimality";
        cert.variable_coprime_qm = true;
        for (const Polynomial& h : fp.factors)
            if (gcd(P.q * P.m, h.evaluate(*P.p)) != 1) cert.variable_coprime_qm = false;
        link = "squarefree";
        auto variable_factored = factor_variable_part(fp, *P.p, budget);
        cert.variable_squarefree = squarefree_status(variable_factored);
        FactoredInteger forced;
        forced.factors[P.q] = static_cast<unsigned>(to_uint64(P.q));
        for (const Int& r : P.m_primes)
            forced.factors[r] = static_cast<unsigned>(to_uint64(P.q - 1));
        cert.delta = multiply(forced, variable_factored);
        cert.delta.sign = check.discriminant_sign;
        if (!cert.identity_checked) {
            cert.failing_link = "identity";
        } else if (!cert.variable_coprime_qm) {
            cert.failing_link = "coprimality";
        } else if (cert.variable_squarefree.kind != SquarefreeStatus::Kind::yes) {
            cert.failing_link = "squarefree";
        } else {
            cert.verdict = MonogenicVerdict::monogenic;
        }
    } catch (const ConstructionError& e) {
        cert.failing_link = link + ": " + e.what();
    }
    return cert;
}

} // namespace monogen

#endif
