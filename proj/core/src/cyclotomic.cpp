#include "lensinv/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

namespace lensinv {

namespace {

constexpr long kMaxConductor = 2'000'000;

void check_conductor(long n) {
    if (n < 1) throw std::domain_error("conductor must be positive");
    if (n > kMaxConductor)
        throw std::domain_error("conductor " + std::to_string(n) + " exceeds supported limit");
}

}  // namespace

long euler_phi(long n) {
    check_conductor(n);
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

namespace {

// Exact division of integer polynomials, divisor monic. Remainder must be
// zero; asserted by construction (x^n - 1 = prod of Phi_d).
std::vector<Integer> exact_div_monic(std::vector<Integer> a, const std::vector<Integer>& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const long da = static_cast<long>(a.size()) - 1;
    std::vector<Integer> q(da - db + 1);
    for (long i = da; i >= db; --i) {
        Integer t = a[i];
        if (t == 0) continue;
        q[i - db] = t;
        for (long j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw std::logic_error("exact_div_monic: nonzero remainder");
    return q;
}

std::vector<Integer> compute_cyclo_coeffs(long n) {
    std::vector<Integer> f(n + 1);
    f[0] = -1;
    f[n] = 1;
    if (n == 1) return f;
    for (long d : divisors(n)) {
        if (d == n) continue;
        f = exact_div_monic(std::move(f), cyclo_poly(d).coeffs());
    }
    return f;
}

}  // namespace

CycloPolynomial::CycloPolynomial(long n, std::vector<Integer> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
    fits_i64_ = true;
    const long deg = degree();
    for (long i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        if (!coeffs_[i].fits_slong_p()) {
            fits_i64_ = false;
            lower_i64_.clear();
            break;
        }
        lower_i64_.emplace_back(i, static_cast<long long>(coeffs_[i].get_si()));
    }
}

const CycloPolynomial& cyclo_poly(long n) {
    check_conductor(n);
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CycloPolynomial>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    // Compute outside the lock (recursion over divisors); insertion is
    // idempotent, first writer wins.
    auto fresh = std::unique_ptr<CycloPolynomial>(
        new CycloPolynomial(n, compute_cyclo_coeffs(n)));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(n, std::move(fresh));
    return *it->second;
}

// ---------------------------------------------------------------------------
// Reduction kernels
// ---------------------------------------------------------------------------

namespace detail {

namespace {

// Synthetic division fast path. Returns false if any intermediate value
// overflows int64; caller retries with bignums.
bool reduce_i64(const CycloPolynomial& phi, std::vector<long long>& v) {
    if (!phi.fits_i64()) return false;
    const long d = phi.degree();
    const auto& lower = phi.lower_terms_i64();
    for (long i = static_cast<long>(v.size()) - 1; i >= d; --i) {
        long long t = v[i];
        if (t == 0) continue;
        v[i] = 0;
        for (const auto& [j, c] : lower) {
            long long prod, next;
            if (__builtin_mul_overflow(t, c, &prod)) return false;
            if (__builtin_sub_overflow(v[i - d + j], prod, &next)) return false;
            v[i - d + j] = next;
        }
    }
    return true;
}

void reduce_mpz(const CycloPolynomial& phi, std::vector<Integer>& v) {
    const long d = phi.degree();
    const auto& coeffs = phi.coeffs();
    for (long i = static_cast<long>(v.size()) - 1; i >= d; --i) {
        if (v[i] == 0) continue;
        Integer t = v[i];
        v[i] = 0;
        for (long j = 0; j < d; ++j) {
            if (coeffs[j] == 0) continue;
            v[i - d + j] -= t * coeffs[j];
        }
    }
    v.resize(d);
}

}  // namespace

std::vector<Integer> reduce_cyclic_mod_phi(long n, const std::vector<long long>& cyc) {
    const CycloPolynomial& phi = cyclo_poly(n);
    std::vector<long long> work = cyc;
    if (reduce_i64(phi, work)) {
        std::vector<Integer> out(phi.degree());
        for (long i = 0; i < phi.degree(); ++i) out[i] = Integer(static_cast<long>(work[i]));
        return out;
    }
    std::vector<Integer> big(cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i) big[i] = Integer(static_cast<long>(cyc[i]));
    return reduce_cyclic_mod_phi(n, std::move(big));
}

std::vector<Integer> reduce_cyclic_mod_phi(long n, std::vector<Integer> cyc) {
    const CycloPolynomial& phi = cyclo_poly(n);
    reduce_mpz(phi, cyc);
    return cyc;
}

// Dense rational synthetic division mod Phi_n; v may have any length.
std::vector<Rational> reduce_rational_mod_phi(long n, std::vector<Rational> v) {
    const CycloPolynomial& phi = cyclo_poly(n);
    const long d = phi.degree();
    const auto& coeffs = phi.coeffs();
    for (long i = static_cast<long>(v.size()) - 1; i >= d; --i) {
        if (v[i] == 0) continue;
        Rational t = v[i];
        v[i] = 0;
        for (long j = 0; j < d; ++j) {
            if (coeffs[j] == 0) continue;
            v[i - d + j] -= t * Rational(coeffs[j]);
        }
    }
    v.resize(d, Rational(0));
    return v;
}

std::vector<Rational> mul_mod_phi(long n, const std::vector<Rational>& a,
                                  const std::vector<Rational>& b) {
    std::vector<Rational> conv(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            conv[i + j] += a[i] * b[j];
        }
    }
    return reduce_rational_mod_phi(n, std::move(conv));
}

CycloBuilder::CycloBuilder(long n) : n_(n), cyc_(n, 0) { check_conductor(n); }

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("CycloBuilder: int64 overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("CycloBuilder: int64 overflow");
    return r;
}

}  // namespace

void CycloBuilder::add_term(const Integer& exponent, long long coeff) {
    Integer e;
    Integer nn(n_);
    mpz_mod(e.get_mpz_t(), exponent.get_mpz_t(), nn.get_mpz_t());
    long idx = e.get_si();
    cyc_[idx] = checked_add(cyc_[idx], coeff);
}

void CycloBuilder::multiply_monomial(const Integer& exponent, long long coeff) {
    multiply_sparse({{exponent, coeff}});
}

void CycloBuilder::multiply_sparse(const std::vector<std::pair<Integer, long long>>& terms) {
    std::vector<long long> out(n_, 0);
    Integer nn(n_);
    for (const auto& [exp_raw, c] : terms) {
        if (c == 0) continue;
        Integer e;
        mpz_mod(e.get_mpz_t(), exp_raw.get_mpz_t(), nn.get_mpz_t());
        long shift = e.get_si();
        for (long i = 0; i < n_; ++i) {
            if (cyc_[i] == 0) continue;
            long k = i + shift;
            if (k >= n_) k -= n_;
            out[k] = checked_add(out[k], checked_mul(cyc_[i], c));
        }
    }
    cyc_ = std::move(out);
}

CycloElement CycloBuilder::to_element(const Rational& scale) const {
    std::vector<Integer> reduced = reduce_cyclic_mod_phi(n_, cyc_);
    std::vector<Rational> coeffs(reduced.size());
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (reduced[i] != 0) coeffs[i] = scale * Rational(reduced[i]);
    }
    return CycloElement::from_coeffs(n_, std::move(coeffs));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// CycloElement
// ---------------------------------------------------------------------------

CycloElement CycloElement::zero(long conductor) {
    check_conductor(conductor);
    return CycloElement(conductor, std::vector<Rational>(euler_phi(conductor), Rational(0)));
}

CycloElement CycloElement::one(long conductor) {
    return from_rational(conductor, Rational(1));
}

CycloElement CycloElement::from_rational(long conductor, const Rational& value) {
    check_conductor(conductor);
    std::vector<Rational> c(euler_phi(conductor), Rational(0));
    c[0] = value;
    return CycloElement(conductor, std::move(c));
}

CycloElement CycloElement::from_coeffs(long conductor, std::vector<Rational> raw) {
    check_conductor(conductor);
    const long phi = euler_phi(conductor);
    if (static_cast<long>(raw.size()) > conductor) {
        // fold exponents mod n before dividing by Phi_n
        std::vector<Rational> folded(conductor, Rational(0));
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (raw[i] != 0) folded[i % conductor] += raw[i];
        raw = std::move(folded);
    }
    if (static_cast<long>(raw.size()) > phi)
        raw = detail::reduce_rational_mod_phi(conductor, std::move(raw));
    raw.resize(phi, Rational(0));
    return CycloElement(conductor, std::move(raw));
}

bool CycloElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloElement::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycloElement::rational_value() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) throw std::domain_error("CycloElement: value is not rational");
    return coeffs_[0];
}

CycloElement CycloElement::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return CycloElement(conductor_, std::move(c));
}

namespace {

void require_same_conductor(const CycloElement& x, const CycloElement& y) {
    if (x.conductor() != y.conductor())
        throw std::domain_error("CycloElement: conductor mismatch (" +
                                std::to_string(x.conductor()) + " vs " +
                                std::to_string(y.conductor()) + "); embed first");
}

}  // namespace

CycloElement operator+(const CycloElement& x, const CycloElement& y) {
    require_same_conductor(x, y);
    std::vector<Rational> c(x.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeffs_[i] + y.coeffs_[i];
    return CycloElement(x.conductor_, std::move(c));
}

CycloElement operator-(const CycloElement& x, const CycloElement& y) {
    require_same_conductor(x, y);
    std::vector<Rational> c(x.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coeffs_[i] - y.coeffs_[i];
    return CycloElement(x.conductor_, std::move(c));
}

CycloElement operator*(const CycloElement& x, const CycloElement& y) {
    require_same_conductor(x, y);
    if (x.is_zero() || y.is_zero()) return CycloElement::zero(x.conductor_);
    return CycloElement(x.conductor_, detail::mul_mod_phi(x.conductor_, x.coeffs_, y.coeffs_));
}

CycloElement CycloElement::operator*(const Rational& scalar) const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) c[i] = coeffs_[i] * scalar;
    return CycloElement(conductor_, std::move(c));
}

bool operator==(const CycloElement& x, const CycloElement& y) {
    if (x.conductor_ == y.conductor_) return x.coeffs_ == y.coeffs_;
    long l = std::lcm(x.conductor_, y.conductor_);
    return x.embed(l).coeffs_ == y.embed(l).coeffs_;
}

// ---------------------------------------------------------------------------
// Inverse (extended Euclid against Phi_n over Q)
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Rational>;  // dense, trimmed (empty = zero)

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// a -= q * b applied in place during division; returns quotient.
Poly poly_divmod(Poly& a, const Poly& b) {
    Poly q;
    const long db = static_cast<long>(b.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long da = static_cast<long>(a.size()) - 1;
        Rational factor = a.back() / b.back();
        long shift = da - db;
        if (static_cast<long>(q.size()) < shift + 1) q.resize(shift + 1, Rational(0));
        q[shift] = factor;
        for (long j = 0; j <= db; ++j)
            if (b[j] != 0) a[shift + j] -= factor * b[j];
        a.pop_back();  // leading term cancels exactly
        trim(a);
    }
    return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    return c;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw std::domain_error("CycloElement: inverse of zero");
    Poly r0;
    for (const auto& c : cyclo_poly(conductor_).coeffs()) r0.push_back(Rational(c));
    Poly r1 = coeffs_;
    trim(r1);
    Poly t0, t1{Rational(1)};
    while (!r1.empty()) {
        // monic normalization keeps coefficient growth in check
        Rational lc = r1.back();
        if (lc != 1) {
            for (auto& c : r1) c /= lc;
            for (auto& c : t1) c /= lc;
        }
        Poly r2 = r0;
        Poly q = poly_divmod(r2, r1);
        Poly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        t0 = std::move(t1);
        r1 = std::move(r2);
        t1 = std::move(t2);
    }
    // r0 is the gcd; Phi_n irreducible and x nonzero force a constant.
    if (r0.size() != 1)
        throw std::logic_error("CycloElement::inverse: non-constant gcd");
    Poly result = t0;
    for (auto& c : result) c /= r0[0];
    return from_coeffs(conductor_, std::move(result));
}

CycloElement CycloElement::embed(long m) const {
    check_conductor(m);
    if (m % conductor_ != 0)
        throw std::domain_error("CycloElement::embed: " + std::to_string(conductor_) +
                                " does not divide " + std::to_string(m));
    if (m == conductor_) return *this;
    const long stretch = m / conductor_;
    std::vector<Rational> raw(static_cast<std::size_t>(
                                  (coeffs_.size() - 1) * stretch + 1),
                              Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) raw[i * stretch] = coeffs_[i];
    return from_coeffs(m, std::move(raw));
}

CycloElement CycloElement::galois(long k) const {
    long kk = ((k % conductor_) + conductor_) % conductor_;
    if (std::gcd(kk, conductor_) != 1)
        throw std::domain_error("CycloElement::galois: exponent not coprime to conductor");
    std::vector<Rational> raw(conductor_, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) raw[(i * kk) % conductor_] += coeffs_[i];
    return from_coeffs(conductor_, std::move(raw));
}

std::complex<double> CycloElement::to_complex(int precision) const {
    if (precision < 1) throw std::domain_error("to_complex: precision must be >= 1");
    const long double tau = 6.283185307179586476925286766559L;
    long double re = 0, im = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long double c = static_cast<long double>(mpq_get_d(coeffs_[i].get_mpq_t()));
        long double angle = tau * (static_cast<long double>(i) / conductor_);
        re += c * cosl(angle);
        im += c * sinl(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

CycloElement root_of_unity(long n, const Integer& k) {
    detail::CycloBuilder b(n);
    b.add_term(k, 1);
    return b.to_element(Rational(1));
}

CycloElement gauss_eps_sqrt(long c) {
    if (c < 1 || c % 2 == 0)
        throw std::domain_error("gauss_eps_sqrt: c must be odd and positive");
    detail::CycloBuilder b(c);
    for (long j = 0; j < c; ++j) {
        // j^2 mod c stays well inside long long for supported conductors
        Integer e = Integer(j) * Integer(j);
        b.add_term(e, 1);
    }
    return b.to_element(Rational(1));
}

}  // namespace lensinv
