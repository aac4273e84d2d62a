// Exact Bernoulli numbers and the regular/irregular prime classification.
#ifndef MONOGEN_BERNOULLI_HPP
#define MONOGEN_BERNOULLI_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/rational.hpp"

namespace monogen {

// B_0..B_N computed by the recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0 with
// B_0 = 1, entirely in exact rationals. This is the convention with
// B_1 = -1/2.
class BernoulliCache {
public:
    explicit BernoulliCache(std::size_t max_index) {
        values_.reserve(max_index + 1);
        values_.emplace_back(1);
        for (std::size_t m = 1; m <= max_index; ++m) {
            Rational acc = 0;
            for (std::size_t j = 0; j < m; ++j) {
                acc += Rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j))) *
                       values_[j];
            }
            values_.push_back(-acc / Rational(m + 1));
        }
    }

    std::size_t max_index() const { return values_.size() - 1; }

    const Rational& value(std::size_t n) const {
        if (n >= values_.size()) throw std::out_of_range("BernoulliCache: index beyond cache");
        return values_[n];
    }

private:
    std::vector<Rational> values_;
};

// An odd prime p is regular when p divides no numerator among B_0..B_{p-3}
// (only even indices matter: B_n = 0 for odd n >= 3, and B_1 = -1/2).
inline bool is_regular_prime(const Int& p) {
    if (p < 3) throw std::domain_error("is_regular_prime: requires an odd prime >= 3");
    if (p == 3) return true; // empty range of even indices
    std::size_t top = static_cast<std::size_t>(to_uint64(p - 3));
    BernoulliCache cache(top);
    for (std::size_t k = 2; k <= top; k += 2) {
        if (numerator(cache.value(k)) % p == 0) return false;
    }
    return true;
}

} // namespace monogen

#endif
