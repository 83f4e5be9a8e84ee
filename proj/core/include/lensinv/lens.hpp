#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lensinv/cyclotomic.hpp"
#include "lensinv/numtheory.hpp"

namespace lensinv {

/// A lens space L(p,q), validated and stored with q reduced to [0, p).
/// p = 1 (the 3-sphere) forces q = 0. |H_1| = p.
class LensSpace {
public:
    LensSpace() : p_(1), q_(0) {}

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& h1_order() const { return p_; }

    friend bool operator==(const LensSpace& a, const LensSpace& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }

private:
    friend LensSpace lens_normalize(const Integer& p, const Integer& q);
    LensSpace(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {}

    Integer p_;
    Integer q_;
};

/// Validates p >= 1, gcd(p,q) = 1 and reduces q mod p.
LensSpace lens_normalize(const Integer& p, const Integer& q);

enum class XiCase { C1, CGt1Eta, Zero, Sphere };

/// Tag names: C1, C_GT1_ETA, ZERO, SPHERE.
const char* to_string(XiCase c);

/// A xi_r evaluation together with every intermediate quantity, for audit
/// and testing. `value` is canonical with conductor dividing p*r.
struct XiTrace {
    long r = 0;
    Integer c;                          // gcd(p, r)
    XiCase case_tag = XiCase::Sphere;
    int eta = 0;                        // +-1 in the c>1 nonzero case, else 0
    std::optional<Integer> q_star;      // inverse of q mod p, in (0,p); absent for S^3
    std::optional<Integer> p_star;      // (1 - q*q_star)/p, so p_star*p + q_star*q = 1
    std::optional<BezoutPair> bezout;   // ((p/c)', (r/c)') when c > 1
    std::optional<Integer> r_prime;     // inverse of r mod p, c = 1 case
    std::optional<Integer> p_prime;     // inverse of p mod r, c = 1 case
    CycloElement value;
    std::complex<double> value_approx;
};

/// The SO(3) invariant xi_r(L, e_r), exact in Q(zeta_{pr}).
/// Requires odd r >= 3.
XiTrace xi(const LensSpace& L, long r);

/// xi(L1).value / xi(L2).value; throws std::domain_error when the
/// denominator is the zero case.
CycloElement xi_ratio(const LensSpace& L1, const LensSpace& L2, long r);

/// Exact equality of the two xi values (embedding into the common field
/// when the conductors differ).
bool xi_equal(const LensSpace& L1, const LensSpace& L2, long r);

/// Truncated Ohtsuki series sum lambda_n h^n with exact rational
/// coefficients; lambda_0 = 1/p.
struct TauSeries {
    Integer p;
    Integer q;
    std::vector<Rational> lambda;  // lambda[0..order]

    int order() const { return static_cast<int>(lambda.size()) - 1; }
};

TauSeries tau_series(const LensSpace& L, int order);

/// tau(L1) = tau(L2), via the closed-form criterion: equal p and equal
/// Dedekind sums.
bool tau_equal(const LensSpace& L1, const LensSpace& L2);

/// Oriented homeomorphism classification: L(p,q) = L(p,q') iff
/// q' = q or q' = q^{-1} (mod p).
bool oriented_homeomorphic(const LensSpace& L1, const LensSpace& L2);

/// True when every lambda_n denominator factors over {2} u primes(p).
bool tau_denominators_supported(const TauSeries& t);

namespace detail {

/// xi with the Bezout pair ((p/c)', (r/c)') replaced by the shifted
/// representative ((p/c)' + k(r/c), (r/c)' - k(p/c)). Testing hook for the
/// representative-independence invariant; shift 0 is xi itself.
XiTrace xi_shifted(const LensSpace& L, long r, long bezout_shift);

}  // namespace detail

}  // namespace lensinv
