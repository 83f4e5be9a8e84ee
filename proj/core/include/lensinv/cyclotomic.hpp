#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lensinv/rational.hpp"

namespace lensinv {

long euler_phi(long n);
std::vector<long> divisors(long n);

/// The n-th cyclotomic polynomial Phi_n, monic of degree phi(n), with
/// exact integer coefficients. Obtained from cyclo_poly(); instances are
/// cached and immutable.
class CycloPolynomial {
public:
    long n() const { return n_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Nonzero coefficients below the leading term, as (index, value).
    /// All known values in this library's range fit in long long; the
    /// reduction routines fall back to bignum arithmetic if not.
    const std::vector<std::pair<long, long long>>& lower_terms_i64() const { return lower_i64_; }
    bool fits_i64() const { return fits_i64_; }

private:
    friend const CycloPolynomial& cyclo_poly(long n);
    CycloPolynomial(long n, std::vector<Integer> coeffs);

    long n_;
    std::vector<Integer> coeffs_;  // coeffs_[i] is the x^i coefficient
    std::vector<std::pair<long, long long>> lower_i64_;
    bool fits_i64_ = false;
};

/// Phi_n via exact division of x^n - 1 by Phi_d over all proper divisors
/// d | n. Memoized; safe for concurrent use.
const CycloPolynomial& cyclo_poly(long n);

/// An element of Q(zeta_n) in canonical form: rational coordinates in the
/// power basis 1, zeta, ..., zeta^{phi(n)-1} after reduction mod Phi_n.
/// Two elements of equal conductor are equal iff their coordinate vectors
/// are equal. Immutable value type.
class CycloElement {
public:
    CycloElement() : conductor_(1), coeffs_(1, Rational(0)) {}

    static CycloElement zero(long conductor);
    static CycloElement one(long conductor);
    static CycloElement from_rational(long conductor, const Rational& value);
    /// From arbitrary power-basis coefficients (any length <= conductor);
    /// reduces mod Phi_n.
    static CycloElement from_coeffs(long conductor, std::vector<Rational> raw);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;
    /// The rational value if the element lies in Q, else throws.
    Rational rational_value() const;

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& x, const CycloElement& y);
    friend CycloElement operator-(const CycloElement& x, const CycloElement& y);
    friend CycloElement operator*(const CycloElement& x, const CycloElement& y);
    CycloElement operator*(const Rational& scalar) const;

    /// Mathematical equality; elements of different conductors are
    /// compared after embedding into the lcm.
    friend bool operator==(const CycloElement& x, const CycloElement& y);
    friend bool operator!=(const CycloElement& x, const CycloElement& y) { return !(x == y); }

    /// Multiplicative inverse via extended Euclid against Phi_n over Q.
    /// Throws std::domain_error on zero.
    CycloElement inverse() const;

    /// Image under zeta_n -> zeta_m^{m/n}; requires conductor | m.
    CycloElement embed(long m) const;

    /// Coefficient-level Galois map zeta_n -> zeta_n^k, gcd(k, n) = 1.
    CycloElement galois(long k) const;

    /// Numeric evaluation at e^{2 pi i / n}. `precision` is a rendering
    /// hint in decimal digits (must be >= 1); evaluation is done in long
    /// double with per-term argument reduction.
    std::complex<double> to_complex(int precision = 15) const;

private:
    CycloElement(long conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    long conductor_;
    std::vector<Rational> coeffs_;
};

/// zeta_n^k in canonical form (k arbitrary, reduced mod n).
CycloElement root_of_unity(long n, const Integer& k);

/// The quadratic Gauss sum sum_{j=0}^{c-1} zeta_c^{j^2} for odd c, which
/// equals eps(c) sqrt(c) with eps(c) = 1 for c = 1 (mod 4) and i for
/// c = 3 (mod 4). Keeps that factor inside the cyclotomic field.
CycloElement gauss_eps_sqrt(long c);

namespace detail {

/// Accumulator for integer combinations of roots of unity of conductor n,
/// held as a cyclic exponent vector in Z[x]/(x^n - 1). The hot path for
/// building xi values: everything stays in machine integers (with bignum
/// escalation on overflow) until one final reduction mod Phi_n.
class CycloBuilder {
public:
    explicit CycloBuilder(long n);

    long n() const { return n_; }

    /// coeff * zeta_n^exponent (exponent arbitrary, reduced mod n).
    void add_term(const Integer& exponent, long long coeff);

    /// Cyclic convolution with coeff * zeta^exponent applied to every
    /// current term -- multiply by a monomial.
    void multiply_monomial(const Integer& exponent, long long coeff);

    /// Multiply by a sparse sum of monomials given as (exponent, coeff).
    void multiply_sparse(const std::vector<std::pair<Integer, long long>>& terms);

    /// Reduce mod Phi_n and scale: canonical scale * (this element).
    CycloElement to_element(const Rational& scale) const;

    const std::vector<long long>& raw() const { return cyc_; }

private:
    long n_;
    std::vector<long long> cyc_;
};

/// Reduces a cyclic integer vector (length n, exponents mod n) to the
/// canonical power basis mod Phi_n. Exact; int64 fast path with checked
/// arithmetic, bignum fallback.
std::vector<Integer> reduce_cyclic_mod_phi(long n, const std::vector<long long>& cyc);
std::vector<Integer> reduce_cyclic_mod_phi(long n, std::vector<Integer> cyc);

/// Dense product of two coefficient vectors reduced mod Phi_n (the
/// generic multiplication kernel).
std::vector<Rational> mul_mod_phi(long n, const std::vector<Rational>& a,
                                  const std::vector<Rational>& b);

}  // namespace detail

}  // namespace lensinv
