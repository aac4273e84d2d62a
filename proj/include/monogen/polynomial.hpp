// Dense univariate polynomials over arbitrary-precision integers.
//
// Coefficients are stored ascending (index i = coefficient of x^i) with no
// trailing zeros, so degree() == size - 1 and the zero polynomial is the
// empty vector. All operations are exact; multiplication is schoolbook
// convolution, which is plenty at the degrees that occur here.
#ifndef MONOGEN_POLYNOMIAL_HPP
#define MONOGEN_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monogen/integer.hpp"

namespace monogen {

// Raised when an antiderivative would need a fractional coefficient.
struct NonIntegralAntiderivative : std::domain_error {
    std::size_t offending_degree; // degree u of the term c*x^u with (u+1) not dividing c
    explicit NonIntegralAntiderivative(std::size_t u)
        : std::domain_error("antiderivative coefficient at degree " + std::to_string(u + 1) +
                            " is not integral: " + std::to_string(u + 1) +
                            " does not divide the degree-" + std::to_string(u) + " coefficient"),
          offending_degree(u) {}
};

class Polynomial {
public:
    Polynomial() = default; // zero polynomial
    Polynomial(std::initializer_list<Int> ascending) : c_(ascending) { trim(); }
    explicit Polynomial(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial constant(Int v) {
        Polynomial p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }
    // c * x^k
    static Polynomial monomial(Int c, std::size_t k) {
        Polynomial p;
        if (c != 0) {
            p.c_.assign(k + 1, Int(0));
            p.c_[k] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return c_; }

    const Int& coeff(std::size_t i) const {
        static const Int zero = 0;
        return i < c_.size() ? c_[i] : zero;
    }
    const Int& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return c_ != o.c_; }
    // Order by degree, then by coefficients from the top down; used to make
    // factor lists deterministic.
    bool operator<(const Polynomial& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        }
        return false;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Polynomial operator+(const Polynomial& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator*(const Polynomial& o) const {
        if (c_.empty() || o.c_.empty()) return {};
        std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Int& s) const {
        Polynomial r = *this;
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }

    Int evaluate(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Int> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
        return Polynomial(std::move(r));
    }

    // The antiderivative vanishing at 0. Each term c*x^u integrates to
    // (c/(u+1))*x^(u+1); a non-exact division is reported with the degree
    // that caused it.
    Polynomial antiderivative_from_zero() const {
        std::vector<Int> r(c_.size() + 1, Int(0));
        for (std::size_t u = 0; u < c_.size(); ++u) {
            Int div(u + 1);
            if (c_[u] % div != 0) throw NonIntegralAntiderivative(u);
            r[u + 1] = c_[u] / div;
        }
        return Polynomial(std::move(r));
    }

    // x^deg(p) * p(1/x): the coefficient sequence reversed.
    Polynomial reciprocal() const {
        if (c_.empty() || c_.front() == 0)
            throw std::domain_error("reciprocal requires a nonzero constant term");
        std::vector<Int> r(c_.rbegin(), c_.rend());
        return Polynomial(std::move(r));
    }

    // q does not divide the leading coefficient, q divides every lower
    // coefficient, and q^2 does not divide the constant term.
    bool is_eisenstein(const Int& q) const {
        if (degree() < 1) return false;
        if (c_.back() % q == 0) return false;
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
            if (c_[i] % q != 0) return false;
        }
        return c_.front() % (q * q) != 0;
    }

    // Coefficientwise least nonnegative residues mod n; the degree may drop.
    Polynomial reduce_mod(const Int& n) const {
        if (n < 2) throw std::domain_error("reduce_mod: modulus must be at least 2");
        std::vector<Int> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r[i] = c_[i] % n;
            if (r[i] < 0) r[i] += n;
        }
        return Polynomial(std::move(r));
    }

    std::string str() const; // pretty printer, defined below

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

inline Polynomial operator*(const Int& s, const Polynomial& p) { return p * s; }

// Euclidean division by a monic divisor: f = quot * d + rem, deg(rem) < deg(d).
// Exact over the integers because d is monic.
inline std::pair<Polynomial, Polynomial> divmod_monic(const Polynomial& f, const Polynomial& d) {
    if (!d.is_monic() || d.degree() < 1)
        throw std::domain_error("divmod_monic: divisor must be monic of degree >= 1");
    std::vector<Int> rem(f.coefficients());
    const long dd = d.degree();
    long fd = f.degree();
    if (fd < dd) return {Polynomial{}, f};
    std::vector<Int> quot(static_cast<std::size_t>(fd - dd) + 1, Int(0));
    for (long k = fd; k >= dd; --k) {
        Int lead = rem[static_cast<std::size_t>(k)];
        if (lead == 0) continue;
        quot[static_cast<std::size_t>(k - dd)] = lead;
        for (long i = 0; i <= dd; ++i) {
            rem[static_cast<std::size_t>(k - dd + i)] -= lead * d.coeff(static_cast<std::size_t>(i));
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

// prod (x + t_i); the empty product is 1. Coefficient of x^(N-n) is the n-th
// elementary symmetric polynomial of the shifts.
inline Polynomial linear_product(const std::vector<Int>& shifts) {
    Polynomial acc = Polynomial::constant(1);
    for (const Int& t : shifts) acc = acc * Polynomial{t, 1};
    return acc;
}

// Remainders a_0..a_t of repeated Euclidean division by phi, so that
// f = sum a_i * phi^i with deg(a_i) < deg(phi).
inline std::vector<Polynomial> phi_expand(const Polynomial& f, const Polynomial& phi) {
    if (!phi.is_monic() || phi.degree() < 1)
        throw std::domain_error("phi_expand: phi must be monic of degree >= 1");
    std::vector<Polynomial> digits;
    Polynomial rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = divmod_monic(rest, phi);
        digits.push_back(std::move(r));
        rest = std::move(q);
    }
    return digits;
}

inline std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& v = c_[i];
        if (v == 0) continue;
        Int a = abs(v);
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) out << a.str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace monogen

#endif
