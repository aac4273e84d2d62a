// phi-adic Newton polygons and their lattice-point index.
//
// The polygon of f with respect to (phi, p) is the lower convex envelope of
// the points (i, nu_p(a_i)) taken from the phi-expansion f = sum a_i phi^i,
// where nu_p of a nonzero remainder polynomial is the minimum valuation of
// its coefficients. All hull and lattice computations are exact integer
// arithmetic; no floating point.
#ifndef MONOGEN_NEWTON_HPP
#define MONOGEN_NEWTON_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "monogen/factor.hpp"
#include "monogen/integer.hpp"
#include "monogen/polynomial.hpp"

namespace monogen {

struct NewtonPoint {
    std::int64_t x = 0; // index i in the phi-expansion
    std::int64_t y = 0; // nu_p(a_i)
    bool operator==(const NewtonPoint&) const = default;
};

struct NewtonPolygon {
    std::vector<NewtonPoint> points;   // all (i, nu_p(a_i)) with a_i != 0, ascending x
    std::vector<NewtonPoint> vertices; // lower hull; slopes strictly increase
    Int p;
    std::int64_t phi_degree = 1;
};

namespace detail {

// Minimum coefficient valuation (Gauss valuation) of a nonzero polynomial.
inline std::int64_t polynomial_valuation(const Polynomial& a, const Int& p) {
    std::int64_t best = -1;
    for (const Int& c : a.coefficients()) {
        if (c == 0) continue;
        std::int64_t v = padic_valuation(c, p);
        if (best < 0 || v < best) best = v;
        if (best == 0) break;
    }
    return best;
}

// z-component of (b - a) x (c - a); negative when b lies strictly above the
// line a-c, zero when collinear.
inline Int cross(const NewtonPoint& a, const NewtonPoint& b, const NewtonPoint& c) {
    return Int(b.x - a.x) * (c.y - a.y) - Int(c.x - a.x) * (b.y - a.y);
}

} // namespace detail

inline NewtonPolygon phi_newton_polygon(const Polynomial& f, const Polynomial& phi, const Int& p) {
    if (f.is_zero()) throw std::domain_error("phi_newton_polygon: f must be nonzero");
    if (!phi.is_monic() || phi.degree() < 1)
        throw std::domain_error("phi_newton_polygon: phi must be monic of degree >= 1");
    if (!is_prime(p)) throw std::domain_error("phi_newton_polygon: p must be prime");
    NewtonPolygon polygon;
    polygon.p = p;
    polygon.phi_degree = phi.degree();
    auto digits = phi_expand(f, phi);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i].is_zero()) continue;
        polygon.points.push_back(
            {static_cast<std::int64_t>(i), detail::polynomial_valuation(digits[i], p)});
    }
    // Monotone-chain lower hull; collinear middle points are dropped, so the
    // vertex slopes increase strictly.
    for (const NewtonPoint& pt : polygon.points) {
        auto& hull = polygon.vertices;
        while (hull.size() >= 2 &&
               detail::cross(hull[hull.size() - 2], hull.back(), pt) <= 0) {
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    return polygon;
}

// deg(phi) times the number of lattice points (x, y) with x >= 1, y >= 1
// lying on or below the polygonal path. Columns are counted by the exact
// floor of the path height, segment by segment.
inline Int phi_index(const NewtonPolygon& polygon) {
    const auto& v = polygon.vertices;
    if (v.empty()) return 0;
    Int count = 0;
    auto column = [&](std::int64_t x, std::int64_t height_floor) {
        if (x >= 1 && height_floor >= 1) count += height_floor;
    };
    if (v.size() == 1) {
        column(v[0].x, v[0].y);
        return count * polygon.phi_degree;
    }
    for (std::size_t s = 0; s + 1 < v.size(); ++s) {
        const NewtonPoint& a = v[s];
        const NewtonPoint& b = v[s + 1];
        // Include the left endpoint only for the first segment; interior
        // vertices are the right endpoint of the previous segment.
        std::int64_t start = (s == 0) ? a.x : a.x + 1;
        for (std::int64_t x = start; x <= b.x; ++x) {
            Int num = Int(a.y) * (b.x - x) + Int(b.y) * (x - a.x);
            Int h = floor_div(num, Int(b.x - a.x));
            column(x, static_cast<std::int64_t>(h));
        }
    }
    return count * polygon.phi_degree;
}

} // namespace monogen

#endif
