// Stirling numbers of the first kind in the all-positive convention
// x(x+1)...(x+n-1) = sum_k s(n,k) x^k, the polynomial family built from them,
// and valuation reports comparing measured nu_p(s(ap, ap-k)) against the
// closed formulas that hold for regular primes.
#ifndef MONOGEN_STIRLING_HPP
#define MONOGEN_STIRLING_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "monogen/bernoulli.hpp"
#include "monogen/factor.hpp"
#include "monogen/integer.hpp"
#include "monogen/polynomial.hpp"
#include "monogen/primes.hpp"

namespace monogen {

// x(x+1)...(x+n-1); the empty product (n = 0) is 1.
inline Polynomial rising_factorial(unsigned n) {
    std::vector<Int> shifts;
    for (unsigned i = 0; i < n; ++i) shifts.emplace_back(i);
    return linear_product(shifts);
}

// Triangular table of s(n,k) for 0 <= k <= n <= N, built by the additive
// recurrence s(n+1,k) = s(n,k-1) + n*s(n,k). All entries are nonnegative;
// out-of-triangle queries return 0.
class StirlingTable {
public:
    explicit StirlingTable(std::size_t max_n) {
        rows_.reserve(max_n + 1);
        rows_.push_back({Int(1)}); // s(0,0) = 1
        for (std::size_t n = 0; n < max_n; ++n) {
            const auto& prev = rows_.back();
            std::vector<Int> row(n + 2, Int(0));
            for (std::size_t k = 1; k <= n + 1; ++k) {
                row[k] = prev[k - 1] + (k <= n ? Int(n) * prev[k] : Int(0));
            }
            rows_.push_back(std::move(row));
        }
    }

    std::size_t max_n() const { return rows_.size() - 1; }

    const Int& value(std::size_t n, std::size_t k) const {
        static const Int zero = 0;
        if (n >= rows_.size()) throw std::out_of_range("StirlingTable: n beyond table");
        if (k >= rows_[n].size()) return zero; // s(n,k) = 0 for k > n
        return rows_[n][k];
    }

private:
    std::vector<std::vector<Int>> rows_;
};

// f(x) = x(x+1)...(x+p-1) - (p-1)! x + p^s: monic of degree p, coefficient 0
// at x^1 (the two (p-1)! x terms cancel), constant term p^s. Requires p >= 7
// prime and regular, s >= 2.
inline Polynomial stirling_polynomial(const Int& p, unsigned s) {
    if (p < 7 || !is_prime(p))
        throw std::domain_error("stirling_polynomial: p must be a prime >= 7");
    if (s < 2) throw std::domain_error("stirling_polynomial: s must be at least 2");
    if (!is_regular_prime(p))
        throw std::domain_error("stirling_polynomial: p must be a regular prime");
    unsigned pu = static_cast<unsigned>(to_uint64(p));
    Polynomial f = rising_factorial(pu);
    f = f - Polynomial::monomial(factorial(pu - 1), 1);
    f = f + Polynomial::constant(pow(p, s));
    return f;
}

// One row of the valuation comparison: measured nu_p(s(ap, ap-k)) next to the
// closed-form prediction where one applies unambiguously.
struct StirlingValuationEntry {
    unsigned k = 0;
    unsigned measured = 0;
    std::optional<unsigned> predicted; // absent = reported without assertion
    bool match = true;                 // measured == predicted when present
};

struct StirlingValuationReport {
    Int p;
    unsigned a = 1;
    std::vector<StirlingValuationEntry> entries;
    unsigned mismatches = 0;
};

// Compares table valuations of s(ap, ap-k) for 2 <= k <= ap-2 against the
// exact formulas: for a = 1 every k in range is predicted as eps_k + 1
// (eps_k = k mod 2); for a > 1 only k = eps_k (mod p-1) carries the exact
// prediction (nu_p(k)+1) * eps_k, and the remaining k are reported
// measurement-only. Requires p >= 5 regular and 1 <= a <= p-1.
inline StirlingValuationReport stirling_valuation_report(const Int& p, unsigned a) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("stirling_valuation_report: p must be a prime >= 5");
    if (!is_regular_prime(p))
        throw std::domain_error("stirling_valuation_report: p must be regular");
    if (a < 1 || Int(a) > p - 1)
        throw std::domain_error("stirling_valuation_report: a must lie in [1, p-1]");

    StirlingValuationReport report;
    report.p = p;
    report.a = a;
    const unsigned pu = static_cast<unsigned>(to_uint64(p));
    const unsigned n = a * pu;
    StirlingTable table(n);
    for (unsigned k = 2; k + 2 <= n; ++k) {
        StirlingValuationEntry entry;
        entry.k = k;
        entry.measured = padic_valuation(table.value(n, n - k), p);
        const unsigned eps = k % 2;
        if (a == 1 && k <= pu - 2) {
            entry.predicted = eps + 1;
        } else if (a > 1 && k % (pu - 1) == eps) {
            entry.predicted = (padic_valuation(Int(k), p) + 1) * eps;
        }
        if (entry.predicted && entry.measured != *entry.predicted) {
            entry.match = false;
            ++report.mismatches;
        }
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace monogen

#endif
