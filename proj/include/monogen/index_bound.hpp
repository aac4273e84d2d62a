// Lower bounds on nu_p([O_K : Z[theta]]) for monic f, by two routes:
//
//  * ore_bound:  sum over the irreducible factors phi_i of f mod p of the
//    lattice-point index of the phi_i-adic Newton polygon.
//  * jk_bound:   write f = prod phi_i^{e_i} + p^l N with l maximal (so the
//    reduction of N mod p is nonzero); each factor contributes u_i given by
//        u_i = ((e_i - 1) l + gcd(e_i, l + 1) - 1) / 2        if t_i > e_i/(l+1)
//        u_i = max{ l t_i, ((e_i - 1)(l - 1) + gcd(e_i, l) - 1) / 2 }  otherwise
//    where t_i is the multiplicity of phi_i mod p in N mod p. The threshold
//    comparison is exact; at an exact tie both branch values are recorded and
//    a disagreement flag is raised when they differ.
//
// A bound alone never certifies non-monogenicity: the verdict also needs f
// irreducible over Q, which certify_non_monogenic establishes through an
// irreducibility witness modulo some auxiliary prime.
#ifndef MONOGEN_INDEX_BOUND_HPP
#define MONOGEN_INDEX_BOUND_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monogen/factor.hpp"
#include "monogen/integer.hpp"
#include "monogen/newton.hpp"
#include "monogen/polynomial.hpp"
#include "monogen/polynomial_mod.hpp"
#include "monogen/primes.hpp"
#include "monogen/stirling.hpp"

namespace monogen {

enum class IndexVerdict { non_monogenic, inconclusive };

inline const char* to_string(IndexVerdict v) {
    return v == IndexVerdict::non_monogenic ? "non-monogenic" : "inconclusive";
}

struct JkFactorRecord {
    unsigned t = 0;           // multiplicity of phi_i mod p in N mod p
    Int u = 0;                // exponent contributed by this factor
    bool first_branch = false;    // t_i > e_i / (l + 1) held strictly
    bool threshold_tie = false;   // t_i == e_i / (l + 1) exactly
    bool branch_disagreement = false; // tie with differing branch values
    Int u_first_branch = 0;
    Int u_second_branch = 0;
};

struct FactorIndexData {
    Polynomial phi;            // monic lift with coefficients in [0, p)
    unsigned multiplicity = 1; // e_i
    NewtonPolygon polygon;     // populated by the polygon route
    Int phi_index_value = 0;   // populated by the polygon route
    std::optional<JkFactorRecord> jk; // populated by the factorwise route
};

struct IndexBoundReport {
    Int p;
    std::string method; // "ore" or "jakhar-khanduja"
    std::vector<FactorIndexData> factors;
    std::int64_t valuation_l = 0; // jakhar-khanduja only
    Polynomial n_mod_p;           // jakhar-khanduja only: N reduced mod p
    Int total_lower_bound = 0;
    IndexVerdict verdict = IndexVerdict::inconclusive;
};

namespace detail {

inline void require_index_bound_input(const Polynomial& f, const Int& p, const char* who) {
    if (f.degree() < 1 || !f.is_monic())
        throw std::domain_error(std::string(who) + ": f must be monic of degree >= 1");
    if (!is_prime(p)) throw std::domain_error(std::string(who) + ": p must be prime");
}

// ((e - 1) * multiplier + gcd(e, gcd_arg) - 1) / 2; the numerator is always even.
inline Int jk_half_formula(unsigned e, std::int64_t multiplier, std::int64_t gcd_arg) {
    Int num = Int(e - 1) * multiplier;
    num += gcd(Int(e), Int(gcd_arg));
    num -= 1;
    if (num % 2 != 0) throw std::logic_error("index bound: odd half-formula numerator");
    return num / 2;
}

inline JkFactorRecord jk_factor_record(unsigned e, unsigned t, std::int64_t l) {
    JkFactorRecord rec;
    rec.t = t;
    rec.u_first_branch = jk_half_formula(e, l, l + 1);
    Int linear = Int(l) * t;
    rec.u_second_branch = std::max(linear, jk_half_formula(e, l - 1, l));
    // threshold: t > e / (l + 1), compared exactly as t (l + 1) > e
    Int lhs = Int(t) * (l + 1);
    rec.first_branch = lhs > e;
    rec.threshold_tie = lhs == e;
    rec.u = rec.first_branch ? rec.u_first_branch : rec.u_second_branch;
    rec.branch_disagreement = rec.threshold_tie && rec.u_first_branch != rec.u_second_branch;
    return rec;
}

} // namespace detail

inline IndexBoundReport ore_bound(const Polynomial& f, const Int& p) {
    detail::require_index_bound_input(f, p, "ore_bound");
    IndexBoundReport report;
    report.p = p;
    report.method = "ore";
    auto mod_factors = factor_mod_p(f, p);
    for (const auto& [phi, e] : mod_factors.factors) {
        FactorIndexData data;
        data.phi = phi;
        data.multiplicity = e;
        data.polygon = phi_newton_polygon(f, phi, p);
        data.phi_index_value = phi_index(data.polygon);
        report.total_lower_bound += data.phi_index_value;
        report.factors.push_back(std::move(data));
    }
    return report;
}

inline IndexBoundReport jk_bound(const Polynomial& f, const Int& p) {
    detail::require_index_bound_input(f, p, "jk_bound");
    IndexBoundReport report;
    report.p = p;
    report.method = "jakhar-khanduja";
    auto mod_factors = factor_mod_p(f, p);
    Polynomial product = Polynomial::constant(1);
    for (const auto& [phi, e] : mod_factors.factors)
        for (unsigned k = 0; k < e; ++k) product = product * phi;
    Polynomial difference = f - product;
    if (difference.is_zero())
        throw std::domain_error(
            "jk_bound: f equals the lifted product of its mod-p factors; "
            "the p-adic valuation of the difference is undefined");
    std::int64_t l = detail::polynomial_valuation(difference, p);
    if (l < 1) throw std::logic_error("jk_bound: difference not divisible by p");
    Int pl = pow(p, static_cast<unsigned>(l));
    std::vector<Int> n_coeffs;
    n_coeffs.reserve(difference.coefficients().size());
    for (const Int& c : difference.coefficients()) {
        if (c % pl != 0) throw std::logic_error("jk_bound: inexact division by p^l");
        n_coeffs.push_back(c / pl);
    }
    Polynomial n_bar = Polynomial(n_coeffs).reduce_mod(p);
    if (n_bar.is_zero()) throw std::logic_error("jk_bound: N vanishes mod p");
    report.valuation_l = l;
    report.n_mod_p = n_bar;
    for (const auto& [phi, e] : mod_factors.factors) {
        FactorIndexData data;
        data.phi = phi;
        data.multiplicity = e;
        unsigned t = 0;
        Polynomial r = n_bar;
        while (r.degree() >= phi.degree()) {
            auto [q, rem] = modp::divmod(r, phi, p);
            if (!rem.is_zero()) break;
            r = std::move(q);
            ++t;
        }
        data.jk = detail::jk_factor_record(e, t, l);
        report.total_lower_bound += data.jk->u * phi.degree();
        report.factors.push_back(std::move(data));
    }
    return report;
}

struct NonMonogenicCertificate {
    Int p;
    unsigned s = 0;
    Polynomial f;
    std::optional<Int> witness_modulus; // prime where f stays irreducible
    IndexBoundReport ore;
    IndexBoundReport jk;
    bool vertex_pattern_expected = false; // polygon vertices match the family shape
    bool point_11_strictly_below = false; // (1,1) lies strictly under the polygon
    IndexVerdict verdict = IndexVerdict::inconclusive;
};

namespace detail {

// Family shape: (0,s),(3,1),(p,0) for s <= 4 — with (2,2) on the first edge
// when s = 4 — and (0,s),(2,2),(3,1),(p,0) once s >= 5.
inline std::vector<NewtonPoint> expected_family_vertices(std::int64_t p, unsigned s) {
    if (s <= 4) return {{0, s}, {3, 1}, {p, 0}};
    return {{0, s}, {2, 2}, {3, 1}, {p, 0}};
}

// Exact test that the hull height at x = 1 exceeds 1.
inline bool strictly_below_at_one(const NewtonPolygon& polygon) {
    const auto& v = polygon.vertices;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].x <= 1 && 1 <= v[i + 1].x) {
            Int num = Int(v[i].y) * (v[i + 1].x - 1) + Int(v[i + 1].y) * (1 - v[i].x);
            return num > v[i + 1].x - v[i].x;
        }
    }
    return false;
}

} // namespace detail

inline std::vector<Int> default_witness_moduli() {
    std::vector<Int> moduli;
    for (std::uint64_t q : primes_below(300)) moduli.emplace_back(q);
    return moduli;
}

inline NonMonogenicCertificate certify_non_monogenic(
    const Int& p, unsigned s,
    const std::vector<Int>& witness_moduli = default_witness_moduli()) {
    NonMonogenicCertificate cert;
    cert.p = p;
    cert.s = s;
    cert.f = stirling_polynomial(p, s);
    cert.witness_modulus = irreducible_mod_p_witness(cert.f, witness_moduli);
    cert.ore = ore_bound(cert.f, p);
    cert.jk = jk_bound(cert.f, p);
    if (cert.ore.factors.size() == 1 && cert.ore.factors[0].phi == Polynomial{0, 1}) {
        const auto& polygon = cert.ore.factors[0].polygon;
        cert.vertex_pattern_expected =
            polygon.vertices ==
            detail::expected_family_vertices(static_cast<std::int64_t>(to_uint64(p)), s);
        cert.point_11_strictly_below = detail::strictly_below_at_one(polygon);
    }
    Int weakest = std::min(cert.ore.total_lower_bound, cert.jk.total_lower_bound);
    cert.verdict = (cert.witness_modulus && weakest >= 1) ? IndexVerdict::non_monogenic
                                                          : IndexVerdict::inconclusive;
    return cert;
}

} // namespace monogen

#endif
