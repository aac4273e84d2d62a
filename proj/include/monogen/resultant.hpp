// Resultants and discriminants of integer polynomials, computed exactly as
// Sylvester determinants with Bareiss fraction-free elimination.
#ifndef MONOGEN_RESULTANT_HPP
#define MONOGEN_RESULTANT_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/polynomial.hpp"

namespace monogen {

// (m+n) x (m+n) matrix of shifted coefficient rows: n rows from f (degree m),
// then m rows from g (degree n), coefficients written high to low.
struct SylvesterMatrix {
    std::vector<std::vector<Int>> entries;
    std::size_t dimension() const { return entries.size(); }
};

inline SylvesterMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("sylvester_matrix: zero polynomial");
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    if (m + n == 0)
        throw std::domain_error("sylvester_matrix: need deg(f) + deg(g) >= 1");
    SylvesterMatrix s;
    s.entries.assign(m + n, std::vector<Int>(m + n, Int(0)));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t i = 0; i <= m; ++i) s.entries[row][row + i] = f.coeff(m - i);
    }
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t i = 0; i <= n; ++i) s.entries[n + row][row + i] = g.coeff(n - i);
    }
    return s;
}

// Bareiss fraction-free elimination: every division is exact, so the whole
// computation stays in the integers. Row swaps flip the sign.
inline Int bareiss_determinant(SylvesterMatrix matrix) {
    auto& m = matrix.entries;
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline Int resultant(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("resultant: zero polynomial");
    const long m = f.degree();
    const long n = g.degree();
    if (m + n < 1) throw std::domain_error("resultant: need deg(f) + deg(g) >= 1");
    // Degenerate Sylvester blocks: a constant contributes no rows of its own.
    if (m == 0) return pow(f.leading(), static_cast<unsigned>(n));
    if (n == 0) return pow(g.leading(), static_cast<unsigned>(m));
    return bareiss_determinant(sylvester_matrix(f, g));
}

// (-1)^(m(m-1)/2) * R(f, f') / leading(f); the division is always exact, and
// a failure of exactness indicates an internal arithmetic bug.
inline Int discriminant(const Polynomial& f) {
    const long m = f.degree();
    if (m < 1) throw std::domain_error("discriminant: need degree >= 1");
    if (m == 1) return 1; // R(f, const) / leading = leading / leading
    Int r = resultant(f, f.derivative());
    const Int& lead = f.leading();
    if (r % lead != 0)
        throw std::logic_error("discriminant: division by the leading coefficient is not exact");
    Int d = r / lead;
    return (m % 4 == 2 || m % 4 == 3) ? -d : d;
}

} // namespace monogen

#endif
