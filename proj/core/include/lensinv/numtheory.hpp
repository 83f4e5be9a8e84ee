#pragma once

#include <cstddef>
#include <vector>

#include "lensinv/rational.hpp"

namespace lensinv {

struct EgcdResult {
    Integer g;  // gcd(|a|,|b|) >= 0
    Integer x;
    Integer y;  // a*x + b*y = g
};

/// Extended gcd. Throws std::domain_error when both inputs are zero.
EgcdResult egcd(const Integer& a, const Integer& b);

/// Inverse of a modulo m, normalized to (0, m). Requires m >= 2 and
/// gcd(a, m) = 1; throws std::domain_error otherwise.
Integer mod_inverse(const Integer& a, const Integer& m);

/// A solved unit Bezout identity a_prime*a + b_prime*b = 1.
struct BezoutPair {
    Integer a_prime;
    Integer b_prime;
    Integer a;
    Integer b;
};

/// Canonical solution of a'a + b'b = 1 for coprime a, b: b' is reduced
/// into [0, |a|) when a != 0, and a' is determined by the identity.
/// Any representative (a'+kb, b'-ka) is mathematically equivalent.
BezoutPair bezout_pair(const Integer& a, const Integer& b);

/// Jacobi symbol (a/n) for odd n >= 1; zero iff gcd(a, n) > 1.
int jacobi(const Integer& a, const Integer& n);

/// Negative (minus) continued fraction p/q = m_n - 1/(m_{n-1} - ...),
/// terms stored outermost first, every term >= 2.
struct NegContFrac {
    std::vector<Integer> terms;
    Integer p;
    Integer q;

    std::size_t length() const { return terms.size(); }
    Integer term_sum() const;
    /// Re-evaluates the nested expression; equals p/q exactly.
    Rational evaluate() const;
};

/// Ceiling recursion m = ceil(p/q), (p,q) <- (q, m*q - p).
/// Requires 0 < q < p and gcd(p,q) = 1.
NegContFrac neg_cont_frac(const Integer& p, const Integer& q);

/// Dedekind sum s(q,p) by the O(p) sawtooth definition
/// s(q,p) = sum_{k=1}^{p-1} ((k/p))((kq/p)). The independent oracle for
/// the other two evaluation routes. q is reduced mod p first.
Rational dedekind_direct(const Integer& q, const Integer& p);

/// s(q,p) via Hickerson's continued-fraction formula
/// 12 s(q,p) = sum m_i + (q + q*)/p - 3n.
Rational dedekind_hickerson(const Integer& q, const Integer& p);

/// s(q,p) via the reciprocity recursion, O(log p) exact.
Rational dedekind_fast(const Integer& q, const Integer& p);

enum class DedekindMethod { Direct, Hickerson, Fast };

struct DedekindSum {
    Integer p;
    Integer q;
    Rational value;
};

DedekindSum dedekind_sum(const Integer& q, const Integer& p,
                         DedekindMethod method = DedekindMethod::Fast);

}  // namespace lensinv
