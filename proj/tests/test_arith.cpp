#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "monogen/factor.hpp"
#include "monogen/integer.hpp"
#include "monogen/primes.hpp"

using namespace monogen;

TEST_CASE("floor division rounds toward negative infinity") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(floor_div(-7, -2) == 3);
    CHECK(floor_div(6, 3) == 2);
    CHECK(floor_div(-6, 3) == -2);
    CHECK(floor_div(0, 5) == 0);
}

TEST_CASE("integer roots and perfect powers") {
    CHECK(kth_root_floor(pow(Int(10), 30), 3) == pow(Int(10), 10));
    CHECK(kth_root_floor(pow(Int(2), 128), 2) == pow(Int(2), 64));
    CHECK(kth_root_floor(Int(26), 3) == 2);
    CHECK(kth_root_floor(Int(27), 3) == 3);
    CHECK(kth_root_floor(Int(28), 3) == 3);
    CHECK(kth_root_floor(Int(1), 7) == 1);

    CHECK(perfect_power_base(Int(1024)) == 2);  // 2^10
    CHECK(perfect_power_base(Int(36)) == 6);
    CHECK(perfect_power_base(Int(64)) == 2);    // largest k: 2^6, not 8^2
    CHECK(perfect_power_base(Int(72)) == 0);
    CHECK(perfect_power_base(Int(2)) == 0);
    CHECK(is_perfect_square(Int(49)));
    CHECK_FALSE(is_perfect_square(Int(48)));
    CHECK_FALSE(is_perfect_square(Int(-4)));
}

TEST_CASE("primality on given examples") {
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(1624));
}

TEST_CASE("primality agrees with a sieve below 100000") {
    auto primes = primes_below(100000);
    std::set<std::uint64_t> prime_set(primes.begin(), primes.end());
    for (std::uint64_t n = 0; n < 100000; ++n) {
        CAPTURE(n);
        REQUIRE(is_prime(n) == (prime_set.count(n) > 0));
    }
}

TEST_CASE("primality rejects classic pseudoprimes") {
    // Carmichael numbers and strong pseudoprimes to many bases.
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(1105));
    CHECK_FALSE(is_prime(1729));
    CHECK_FALSE(is_prime(Int("3215031751")));
    CHECK_FALSE(is_prime(Int("341550071728321")));
    CHECK_FALSE(is_prime(Int("3825123056546413051")));
}

TEST_CASE("primality at and beyond 64 bits") {
    CHECK(is_prime(Int("18446744073709551557"))); // largest prime below 2^64
    CHECK(is_prime(pow(Int(2), 61) - 1));
    CHECK(is_prime(pow(Int(2), 89) - 1));         // above the 13-base bound
    CHECK_FALSE(is_prime(pow(Int(2), 101) - 1));
    CHECK_FALSE(is_prime(pow(Int(2), 89)));
    CHECK_FALSE(is_prime((pow(Int(2), 61) - 1) * (pow(Int(2), 89) - 1)));
}

TEST_CASE("next_prime") {
    CHECK(next_prime(0) == 2);
    CHECK(next_prime(2) == 3);
    CHECK(next_prime(13) == 17);
    CHECK(next_prime(Int("18446744073709551556")) == Int("18446744073709551557"));
}

TEST_CASE("factorization of given examples") {
    auto f = factorize(735);
    CHECK(f.sign == 1);
    CHECK(f.factors == std::map<Int, unsigned>{{3, 1}, {5, 1}, {7, 2}});
    CHECK(f.cofactor == 1);

    auto g = factorize(-20);
    CHECK(g.sign == -1);
    CHECK(g.factors == std::map<Int, unsigned>{{2, 2}, {5, 1}});
    CHECK(g.cofactor == 1);

    auto u = factorize(1);
    CHECK(u.sign == 1);
    CHECK(u.factors.empty());
    CHECK(u.cofactor == 1);

    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("p-adic valuation") {
    CHECK(padic_valuation(175, 7) == 1);
    CHECK(padic_valuation(735, 7) == 2);
    CHECK(padic_valuation(1, 7) == 0);
    CHECK(padic_valuation(-49, 7) == 2);
    CHECK_THROWS_AS(padic_valuation(Int(0), Int(7)), std::domain_error);

    // Rational overload: negative valuations from the denominator.
    CHECK(padic_valuation(Rational(7, 10), 7) == 1);
    CHECK(padic_valuation(Rational(3, 49), 7) == -2);
    CHECK(padic_valuation(Rational(5, 6), 7) == 0);
}

TEST_CASE("squarefull / squarefree partition") {
    auto split1 = squarefull_split(factorize(pow(Int(7), 7) * pow(Int(11), 6) * 13));
    CHECK(split1.first.reconstruct() == pow(Int(7), 7) * pow(Int(11), 6));
    CHECK(split1.second.reconstruct() == 13);

    auto split2 = squarefull_split(factorize(20));
    CHECK(split2.first.reconstruct() == 4);
    CHECK(split2.second.reconstruct() == 5);

    auto split3 = squarefull_split(factorize(30));
    CHECK(split3.first.reconstruct() == 1);
    CHECK(split3.second.reconstruct() == 30);

    // Sign rides on the squarefree side.
    auto split4 = squarefull_split(factorize(-20));
    CHECK(split4.first.reconstruct() == 4);
    CHECK(split4.second.reconstruct() == -5);
}

TEST_CASE("squarefree detection") {
    CHECK(is_squarefree(30).kind == SquarefreeStatus::Kind::yes);
    CHECK(is_squarefree(49).kind == SquarefreeStatus::Kind::no);
    CHECK(is_squarefree(-30).kind == SquarefreeStatus::Kind::yes);

    // Semiprime far beyond the splitting budget: the result is only
    // certified up to the trial bound. Both factors are Mersenne primes,
    // so the construction itself is the oracle.
    Int p = pow(Int(2), 61) - 1;
    Int q = pow(Int(2), 89) - 1;
    FactorBudget small_effort;
    small_effort.rho_iterations = 50'000;
    auto status = is_squarefree(11 * 13 * p * q, small_effort);
    CHECK(status.kind == SquarefreeStatus::Kind::yes_up_to_bound);
    CHECK(status.bound == 1'000'000);

    // The same number times a square of a tracked prime is detected exactly
    // even though the cofactor stays opaque.
    auto status2 = is_squarefree(11 * 11 * 13 * p * q, small_effort);
    CHECK(status2.kind == SquarefreeStatus::Kind::no);
}

TEST_CASE("factorization cracks perfect powers past the trial bound") {
    Int p = next_prime(2'000'003);
    auto f = factorize(pow(p, 4));
    CHECK(f.cofactor == 1);
    CHECK(f.factors == std::map<Int, unsigned>{{p, 4}});
}

TEST_CASE("prime search in residue classes") {
    CHECK(find_prime_in_class(7, 6, 2) == 13);
    CHECK(find_prime_in_class(2, 1, 3) == 3);
    CHECK(find_prime_in_class(7, 6, 14) == 41);
    CHECK_THROWS_AS(find_prime_in_class(10, 5, 2), std::domain_error);
}

TEST_CASE("property: factorization reconstructs the input") {
    std::mt19937_64 rng(20260816);
    FactorBudget light;
    light.trial_bound = 10'000;
    light.rho_iterations = 100'000;
    for (int trial = 0; trial < 1000; ++trial) {
        int bits = 1 + static_cast<int>(rng() % 128);
        Int n = 0;
        for (int i = 0; i < bits; ++i) {
            n <<= 1;
            n |= static_cast<int>(rng() & 1);
        }
        n |= 1; // keep it nonzero
        if (rng() & 1) n = -n;
        auto f = factorize(n, light);
        CAPTURE(n.str());
        REQUIRE(f.reconstruct() == n);
        for (const auto& [p, e] : f.factors) {
            REQUIRE(is_prime(p));
            REQUIRE(e >= 1);
        }
        if (f.cofactor != 1) {
            for (std::uint64_t p : primes_below(light.trial_bound + 1)) {
                REQUIRE(f.cofactor % p != 0);
            }
        }
    }
}

TEST_CASE("property: valuation is additive") {
    std::mt19937_64 rng(7);
    const Int primes[] = {2, 3, 5, 7, 11, 13, 97};
    for (int trial = 0; trial < 200; ++trial) {
        Int a = Int(rng() % 1000000) + 1;
        Int b = Int(rng() % 1000000) + 1;
        const Int& p = primes[rng() % 7];
        REQUIRE(padic_valuation(a * b, p) == padic_valuation(a, p) + padic_valuation(b, p));
    }
}

TEST_CASE("property: multiplying in a square of a tracked prime kills squarefree-ness") {
    std::mt19937_64 rng(11);
    auto primes = primes_below(10'000);
    for (int trial = 0; trial < 100; ++trial) {
        Int n = Int(rng()) + 1;
        Int p = Int(primes[rng() % primes.size()]);
        auto status = is_squarefree(n * p * p);
        REQUIRE(status.kind == SquarefreeStatus::Kind::no);
    }
}

TEST_CASE("property: residue-class prime search returns the minimum") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Int modulus = Int(rng() % 50) + 2;
        Int residue = Int(rng() % 100);
        if (gcd(residue, modulus) != 1) continue;
        Int start = Int(rng() % 1000);
        Int found = find_prime_in_class(modulus, residue, start);
        REQUIRE(is_prime(found));
        REQUIRE((found - residue) % modulus == 0);
        REQUIRE(found >= start);
        for (Int k = start; k < found; ++k) {
            if ((k - residue) % modulus == 0) REQUIRE_FALSE(is_prime(k));
        }
    }
}

TEST_CASE("merging factored values") {
    auto a = factorize(735);   // 3 * 5 * 7^2
    auto b = factorize(-20);   // -1 * 2^2 * 5
    auto ab = multiply(a, b);
    CHECK(ab.reconstruct() == Int(735) * -20);
    CHECK(ab.factors.at(5) == 2);
    CHECK(squarefree_status(ab).kind == SquarefreeStatus::Kind::no);
}
