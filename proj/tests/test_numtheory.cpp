#include <doctest.h>

#include <random>

#include <lensinv/numtheory.hpp>

using namespace lensinv;

namespace {

// Brute-force gcd: largest d dividing both.
Integer gcd_brute(const Integer& a, const Integer& b) {
    Integer aa = abs(a), bb = abs(b);
    Integer best = 0;
    Integer hi = std::max(aa, bb);
    for (Integer d = 1; d <= hi; ++d)
        if ((aa % d == 0 || aa == 0) && (bb % d == 0 || bb == 0)) best = d;
    return best;
}

// Legendre symbol by Euler's criterion, for odd prime p.
int legendre_brute(const Integer& a, const Integer& p) {
    Integer e = (p - 1) / 2;
    Integer r;
    mpz_powm(r.get_mpz_t(), Integer(((a % p) + p) % p).get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("egcd basics and identity") {
    auto r = egcd(1, 0);
    CHECK(r.g == 1);
    CHECK(r.x == 1);
    CHECK(r.y == 0);

    auto s = egcd(25, 11);
    CHECK(s.g == 1);
    CHECK(Integer(25) * s.x + Integer(11) * s.y == 1);

    CHECK(egcd(25, 15).g == gcd_brute(25, 15));
    CHECK(egcd(25, 15).g == 5);

    CHECK_THROWS_AS(egcd(0, 0), std::domain_error);

    std::mt19937 rng(42);
    for (int i = 0; i < 200; ++i) {
        Integer a(static_cast<long>(rng() % 2000) - 1000);
        Integer b(static_cast<long>(rng() % 2000) - 1000);
        if (a == 0 && b == 0) continue;
        auto e = egcd(a, b);
        CHECK(e.g >= 0);
        CHECK(a * e.x + b * e.y == e.g);
        if (abs(a) <= 50 && abs(b) <= 50) CHECK(e.g == gcd_brute(a, b));
    }
}

TEST_CASE("mod_inverse known values and range") {
    CHECK(mod_inverse(11, 25) == 16);
    CHECK(mod_inverse(6, 25) == 21);
    CHECK(mod_inverse(1, 7) == 1);
    CHECK_THROWS_AS(mod_inverse(5, 25), std::domain_error);
    CHECK_THROWS_AS(mod_inverse(3, 1), std::domain_error);

    for (long m = 2; m <= 60; ++m)
        for (long a = 1; a < m; ++a) {
            if (gcd(Integer(a), Integer(m)) != 1) continue;
            Integer inv = mod_inverse(a, m);
            CHECK(inv > 0);
            CHECK(inv < m);
            CHECK((inv * a) % m == 1);
        }
}

TEST_CASE("bezout_pair canonical representative") {
    auto b1 = bezout_pair(5, 1);
    CHECK(b1.a_prime == 0);
    CHECK(b1.b_prime == 1);

    // enumerate the unique b' in [0,5) with 3b' = 1 (mod 5)
    long expect_bp = -1;
    for (long t = 0; t < 5; ++t)
        if ((3 * t) % 5 == 1) expect_bp = t;
    auto b2 = bezout_pair(5, 3);
    CHECK(b2.b_prime == expect_bp);
    CHECK(b2.b_prime == 2);
    CHECK(b2.a_prime == -1);

    auto b3 = bezout_pair(1, 7);
    CHECK(b3.a_prime == 1);
    CHECK(b3.b_prime == 0);

    CHECK_THROWS_AS(bezout_pair(6, 4), std::domain_error);

    for (long a = 1; a <= 30; ++a)
        for (long b = 1; b <= 30; ++b) {
            if (gcd(Integer(a), Integer(b)) != 1) continue;
            auto bez = bezout_pair(a, b);
            CHECK(bez.a_prime * a + bez.b_prime * b == 1);
            CHECK(bez.b_prime >= 0);
            CHECK(bez.b_prime < a);
        }
}

TEST_CASE("jacobi symbol against Euler criterion") {
    CHECK(jacobi(25, 3) == 1);
    CHECK(jacobi(2, 15) == 1);  // (2|3)(2|5) = (-1)(-1)
    CHECK(legendre_brute(2, 3) * legendre_brute(2, 5) == 1);
    for (long a = -5; a <= 5; ++a) CHECK(jacobi(a, 1) == 1);

    CHECK_THROWS_AS(jacobi(3, 4), std::domain_error);
    CHECK_THROWS_AS(jacobi(3, -5), std::domain_error);
    CHECK_THROWS_AS(jacobi(3, 0), std::domain_error);

    // matches the Legendre symbol at odd primes
    for (long p = 3; p <= 100; p += 2) {
        if (!is_prime_small(p)) continue;
        for (long a = 0; a < p; ++a) CHECK(jacobi(a, p) == legendre_brute(a, p));
    }

    // zero iff gcd > 1, multiplicative, periodic
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        long n = 2 * static_cast<long>(rng() % 60) + 1;
        long a = static_cast<long>(rng() % 400) - 200;
        long b = static_cast<long>(rng() % 400) - 200;
        CHECK((jacobi(a, n) == 0) == (gcd(Integer(a), Integer(n)) > 1));
        CHECK(jacobi(Integer(a) * b, n) == jacobi(a, n) * jacobi(b, n));
        CHECK(jacobi(a + n, n) == jacobi(a, n));
    }
}

TEST_CASE("negative continued fraction expansions") {
    auto a = neg_cont_frac(25, 6);
    CHECK(a.terms == std::vector<Integer>{5, 2, 2, 2, 2, 2});
    CHECK(a.length() == 6);
    CHECK(a.term_sum() == 15);

    auto b = neg_cont_frac(25, 11);
    CHECK(b.terms == std::vector<Integer>{3, 2, 2, 3, 2});
    CHECK(b.length() == 5);
    CHECK(b.term_sum() == 12);

    auto c = neg_cont_frac(2, 1);
    CHECK(c.terms == std::vector<Integer>{2});

    CHECK_THROWS_AS(neg_cont_frac(6, 25), std::domain_error);
    CHECK_THROWS_AS(neg_cont_frac(25, 0), std::domain_error);
    CHECK_THROWS_AS(neg_cont_frac(25, 10), std::domain_error);
}

TEST_CASE("negative continued fraction round-trip and term bound") {
    for (long p = 2; p <= 60; ++p)
        for (long q = 1; q < p; ++q) {
            if (gcd(Integer(p), Integer(q)) != 1) continue;
            auto cf = neg_cont_frac(p, q);
            CHECK(cf.evaluate() == make_rational(p, q));
            CHECK(cf.length() >= 1);
            for (const auto& m : cf.terms) CHECK(m >= 2);
        }
}

TEST_CASE("dedekind sum examples") {
    Rational expect = make_rational(-4, 25);
    CHECK(dedekind_direct(6, 25) == expect);
    CHECK(dedekind_direct(1, 2) == 0);
    CHECK(dedekind_direct(1, 3) == make_rational(1, 18));

    CHECK(dedekind_hickerson(6, 25) == expect);
    CHECK(dedekind_hickerson(11, 25) == expect);
    CHECK(dedekind_hickerson(1, 2) == 0);

    CHECK(dedekind_fast(6, 25) == expect);
    CHECK(dedekind_fast(0, 1) == 0);
    CHECK(dedekind_fast(7, 30) == dedekind_direct(7, 30));

    // 12 s = -3 + 27/25 as displayed
    CHECK(12 * expect == Rational(-3) + make_rational(27, 25));

    CHECK_THROWS_AS(dedekind_direct(5, 25), std::domain_error);
    CHECK_THROWS_AS(dedekind_fast(10, 25), std::domain_error);
    CHECK_THROWS_AS(dedekind_hickerson(10, 25), std::domain_error);
}

TEST_CASE("dedekind three-route agreement and identities") {
    for (long p = 1; p <= 120; ++p) {
        for (long q = 0; q < p || (p == 1 && q == 0); ++q) {
            if (p > 1 && (q == 0 || gcd(Integer(p), Integer(q)) != 1)) continue;
            Rational d = dedekind_direct(q, p);
            CHECK(d == dedekind_fast(q, p));
            if (p == 1) {
                CHECK(d == 0);
                break;
            }
            CHECK(d == dedekind_hickerson(q, p));
            // 12 p s is an integer
            CHECK(is_integer(d * 12 * Rational(p)));
            // antisymmetry and inverse symmetry
            CHECK(dedekind_fast(p - q, p) == -d);
            CHECK(dedekind_fast(mod_inverse(q, p), p) == d);
        }
    }
}

TEST_CASE("dedekind reciprocity") {
    for (long p = 1; p <= 60; ++p)
        for (long q = 1; q <= 60; ++q) {
            if (gcd(Integer(p), Integer(q)) != 1) continue;
            Rational lhs = dedekind_direct(q, p) + dedekind_direct(p, q);
            Rational rhs = make_rational(-1, 4) +
                           (make_rational(p, q) + make_rational(q, p) +
                            make_rational(1, Integer(p) * q)) /
                               12;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("dedekind_sum wrapper carries method and fields") {
    auto d = dedekind_sum(6, 25, DedekindMethod::Direct);
    CHECK(d.p == 25);
    CHECK(d.q == 6);
    CHECK(d.value == make_rational(-4, 25));
}
