// JSON encoding of every report type, plus the polynomial literal parser.
// One convention throughout: integers are decimal strings, booleans are JSON
// booleans, enumerations are fixed lowercase strings, and absent optionals
// are omitted rather than null. nlohmann::json keeps object keys sorted, so
// a fixed input always serializes to identical bytes.
#ifndef MONOGEN_JSON_IO_HPP
#define MONOGEN_JSON_IO_HPP

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "monogen/construction.hpp"
#include "monogen/index_bound.hpp"
#include "monogen/newton.hpp"
#include "monogen/polynomial.hpp"
#include "monogen/rational.hpp"
#include "monogen/stirling.hpp"

namespace monogen {

using Json = nlohmann::json;

inline Json encode(const Int& n) { return dec(n); }
inline Json encode(const Rational& r) { return dec(r); }
inline Json encode(std::int64_t n) { return std::to_string(n); }
inline Json encode(std::uint64_t n) { return std::to_string(n); }
inline Json encode(unsigned n) { return std::to_string(n); }
inline Json encode(int n) { return std::to_string(n); }

inline Json encode(const Polynomial& f) {
    Json a = Json::array();
    for (const Int& c : f.coefficients()) a.push_back(dec(c));
    return a;
}

inline Json encode(const FactoredInteger& f) {
    Json factors = Json::object();
    for (const auto& [p, e] : f.factors) factors[dec(p)] = encode(e);
    return Json{{"cofactor", encode(f.cofactor)},
                {"factors", factors},
                {"sign", encode(f.sign)},
                {"squarefree_bound", encode(f.cofactor_squarefree_bound)}};
}

inline Json encode(const SquarefreeStatus& s) {
    switch (s.kind) {
        case SquarefreeStatus::Kind::yes: return Json{{"kind", "yes"}};
        case SquarefreeStatus::Kind::no: return Json{{"kind", "no"}};
        default: return Json{{"bound", encode(s.bound)}, {"kind", "yes-up-to-bound"}};
    }
}

inline Json encode(const ConstructionParams& P) {
    Json j{{"d", encode(P.d)}, {"m", encode(P.m)},   {"q", encode(P.q)},
           {"q0", encode(P.q0)}, {"q1", encode(P.q1)}, {"q2", encode(P.q2)}};
    Json primes = Json::array();
    for (const Int& r : P.m_primes) primes.push_back(encode(r));
    j["m_primes"] = primes;
    if (P.p) j["p"] = encode(*P.p);
    return j;
}

inline Json encode(const std::vector<ParamViolation>& violations) {
    Json a = Json::array();
    for (const auto& v : violations)
        a.push_back(Json{{"condition", v.condition}, {"detail", v.detail}});
    return Json{{"violations", a}};
}

inline Json encode(const CDValues& cd) {
    Json jc = Json::array(), jd = Json::array();
    for (const Int& v : cd.C) jc.push_back(encode(v));
    for (const Int& v : cd.D) jd.push_back(encode(v));
    return Json{{"C", jc}, {"D", jd}};
}

inline Json encode(const IdentityCheck& c) {
    return Json{{"discriminant_sign", encode(c.discriminant_sign)},
                {"equal", c.equal},
                {"lhs", encode(c.lhs)},
                {"rhs", encode(c.rhs)}};
}

inline Json encode(const SolubilityWitness& w) {
    return Json{{"case_id", encode(w.case_id)},
                {"case_prediction_ok", w.case_prediction_ok},
                {"r", encode(w.r)},
                {"z", encode(w.z)}};
}

inline Json encode(const DensityReport& report) {
    Json factors = Json::array();
    for (const auto& entry : report.factors)
        factors.push_back(Json{{"factor", encode(entry.factor)},
                               {"r", encode(entry.r)},
                               {"rho", encode(entry.rho)}});
    Json j{{"factors", factors},
           {"partial_product", encode(report.partial_product)},
           {"prime_bound", encode(report.prime_bound)}};
    if (report.zero_factor_at) j["zero_factor_at"] = encode(*report.zero_factor_at);
    return j;
}

inline Json encode(const std::vector<AdmissiblePrime>& hits) {
    Json a = Json::array();
    for (const auto& h : hits)
        a.push_back(Json{{"coprime_ok", h.coprime_ok},
                         {"p", encode(h.p)},
                         {"squarefree", encode(h.status)}});
    return Json{{"admissible", a}};
}

inline Json encode(const MonogenicityCertificate& cert) {
    Json primes = Json::array();
    for (const Int& r : cert.eisenstein_primes) primes.push_back(encode(r));
    return Json{{"delta", encode(cert.delta)},
                {"delta_value", encode(cert.delta_value)},
                {"eisenstein_primes", primes},
                {"failing_link", cert.failing_link},
                {"identity_checked", cert.identity_checked},
                {"omega_substituted_for_m", cert.omega_substituted_for_m},
                {"params", encode(cert.params)},
                {"polynomial", encode(cert.F)},
                {"schema", "monogenicity-certificate.v1"},
                {"variable_coprime_qm", cert.variable_coprime_qm},
                {"variable_part", encode(cert.variable_part)},
                {"variable_squarefree", encode(cert.variable_squarefree)},
                {"verdict", to_string(cert.verdict)}};
}

inline Json encode(const NewtonPoint& pt) {
    return Json::array({encode(pt.x), encode(pt.y)});
}

inline Json encode(const NewtonPolygon& polygon) {
    Json points = Json::array(), vertices = Json::array();
    for (const auto& pt : polygon.points) points.push_back(encode(pt));
    for (const auto& pt : polygon.vertices) vertices.push_back(encode(pt));
    return Json{{"p", encode(polygon.p)},
                {"phi_degree", encode(polygon.phi_degree)},
                {"points", points},
                {"vertices", vertices}};
}

inline Json encode(const JkFactorRecord& r) {
    return Json{{"branch_disagreement", r.branch_disagreement},
                {"first_branch", r.first_branch},
                {"t", encode(r.t)},
                {"threshold_tie", r.threshold_tie},
                {"u", encode(r.u)},
                {"u_first_branch", encode(r.u_first_branch)},
                {"u_second_branch", encode(r.u_second_branch)}};
}

inline Json encode(const IndexBoundReport& report) {
    Json factors = Json::array();
    for (const auto& fd : report.factors) {
        Json entry{{"multiplicity", encode(fd.multiplicity)}, {"phi", encode(fd.phi)}};
        if (report.method == "ore") {
            entry["phi_index"] = encode(fd.phi_index_value);
            entry["polygon"] = encode(fd.polygon);
        }
        if (fd.jk) entry["jk"] = encode(*fd.jk);
        factors.push_back(entry);
    }
    Json j{{"factors", factors},
           {"method", report.method},
           {"p", encode(report.p)},
           {"total_lower_bound", encode(report.total_lower_bound)},
           {"verdict", to_string(report.verdict)}};
    if (report.method == "jakhar-khanduja") {
        j["n_mod_p"] = encode(report.n_mod_p);
        j["valuation_l"] = encode(report.valuation_l);
    }
    return j;
}

inline Json encode(const NonMonogenicCertificate& cert) {
    Json j{{"f", encode(cert.f)},
           {"jk", encode(cert.jk)},
           {"ore", encode(cert.ore)},
           {"p", encode(cert.p)},
           {"point_11_strictly_below", cert.point_11_strictly_below},
           {"s", encode(cert.s)},
           {"schema", "non-monogenicity-certificate.v1"},
           {"verdict", to_string(cert.verdict)},
           {"vertex_pattern_expected", cert.vertex_pattern_expected}};
    if (cert.witness_modulus) j["witness_modulus"] = encode(*cert.witness_modulus);
    return j;
}

inline Json encode(const StirlingValuationReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json entry{{"k", encode(e.k)}, {"match", e.match}, {"measured", encode(e.measured)}};
        if (e.predicted) entry["predicted"] = encode(*e.predicted);
        entries.push_back(entry);
    }
    return Json{{"a", encode(report.a)},
                {"entries", entries},
                {"mismatches", encode(report.mismatches)},
                {"p", encode(report.p)}};
}

// --- decoding, used by the corpus round-trip -------------------------------

inline Int decode_int(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start)
            throw std::invalid_argument(where + ": empty integer literal");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument(where + ": bad digit '" + s[i] +
                                            "' at position " + std::to_string(i));
        return Int(s);
    }
    throw std::invalid_argument(where + ": expected an integer or decimal string");
}

inline Polynomial decode_polynomial(const Json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected a coefficient array");
    std::vector<Int> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(decode_int(j[i], where + "[" + std::to_string(i) + "]"));
    return Polynomial(std::move(coeffs));
}

// Ascending coefficient list, e.g. "[-5, 0, 1]" for x^2 - 5. Errors carry the
// byte position (from the JSON parser) or the element index.
inline Polynomial parse_polynomial_literal(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("polynomial literal: syntax error at byte " +
                                    std::to_string(e.byte) + " of \"" + text + "\"");
    }
    return decode_polynomial(j, "polynomial literal");
}

} // namespace monogen

#endif
