#include "lensinv/lens.hpp"

#include <numeric>
#include <utility>

namespace lensinv {

LensSpace lens_normalize(const Integer& p, const Integer& q) {
    if (p < 1) throw std::domain_error("lens_normalize: p must be positive");
    if (gcd(p, q) != 1) throw std::domain_error("lens_normalize: gcd(p, q) != 1");
    Integer qr;
    mpz_mod(qr.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    return LensSpace(p, qr);
}

const char* to_string(XiCase c) {
    switch (c) {
        case XiCase::C1: return "C1";
        case XiCase::CGt1Eta: return "C_GT1_ETA";
        case XiCase::Zero: return "ZERO";
        case XiCase::Sphere: return "SPHERE";
    }
    return "?";
}

namespace {

void require_level(long r) {
    if (r < 3 || r % 2 == 0)
        throw std::domain_error("xi: level r must be odd and >= 3");
}

long ambient_conductor(const Integer& p, long r) {
    Integer n = p * r;
    if (!n.fits_slong_p())
        throw std::domain_error("xi: conductor p*r too large for exact evaluation");
    return n.get_si();
}

// -12 s(q,p) as a/p with integer a (12*p*s is always an integer).
Integer framing_exponent(const Integer& q, const Integer& p) {
    Rational t = dedekind_fast(q, p) * 12 * Rational(p);
    if (!is_integer(t)) throw std::logic_error("xi: 12*p*s(q,p) not an integer");
    return -t.get_num();
}

}  // namespace

namespace detail {

XiTrace xi_shifted(const LensSpace& L, long r, long bezout_shift) {
    require_level(r);
    const Integer& p = L.p();
    const Integer& q = L.q();

    XiTrace t;
    t.r = r;

    if (p == 1) {
        t.c = 1;
        t.case_tag = XiCase::Sphere;
        t.value = CycloElement::one(r);
        t.value_approx = t.value.to_complex();
        return t;
    }

    const long n = ambient_conductor(p, r);
    const Integer c = gcd(p, Integer(r));
    t.c = c;

    const Integer q_star = mod_inverse(q, p);
    const Integer p_star = (1 - q_star * q) / p;
    t.q_star = q_star;
    t.p_star = p_star;

    const Integer a = framing_exponent(q, p);

    if (c == 1) {
        const Integer r_prime = mod_inverse(Integer(r), p);
        const Integer p_prime = mod_inverse(p, Integer(r));
        t.r_prime = r_prime;
        t.p_prime = p_prime;
        t.case_tag = XiCase::C1;

        // {p}_r e_r^{-12s} e_p^{r'(q+q*)} (e_r^{2p'} - e_r^{-2p'}) / (e_r^2 - e_r^{-2});
        // the quotient is the geometric sum zeta_r^{2-2p'} sum_{j<p'} zeta_r^{4j}.
        const int kappa = jacobi(p, Integer(r));
        const Integer base = a + Integer(r) * r_prime * (q + q_star) + p * (2 - 2 * p_prime);
        detail::CycloBuilder b(n);
        const long p_prime_l = p_prime.get_si();  // p' in (0, r)
        for (long j = 0; j < p_prime_l; ++j) b.add_term(base + 4 * p * j, 1);
        t.value = b.to_element(Rational(kappa));
        t.value_approx = t.value.to_complex();
        return t;
    }

    // c > 1: the eta branch, or zero. eta = -1 tested first (determinism;
    // c odd means at most one of q* -+ 1 is divisible).
    int eta = 0;
    if ((q_star - 1) % c == 0) eta = -1;
    else if ((q_star + 1) % c == 0) eta = 1;

    const Integer pc = p / c;  // p/c
    const Integer rc = Integer(r) / c;  // r/c
    BezoutPair bez = bezout_pair(pc, rc);
    if (bezout_shift != 0) {
        bez.a_prime += bezout_shift * rc;
        bez.b_prime -= bezout_shift * pc;
    }
    t.bezout = bez;

    if (eta == 0) {
        t.case_tag = XiCase::Zero;
        t.value = CycloElement::zero(n);
        t.value_approx = {0.0, 0.0};
        return t;
    }
    t.eta = eta;
    t.case_tag = XiCase::CGt1Eta;

    // (-1)^{(r-1)/2 (c-1)/2} {p/c}_{r/c} {q}_c e_r^{-12s}
    //   e_{pc}^{(r/c)'(q+q*-eta p*p)} e_{rc}^{-2 eta (p/c)'}
    //   * eps(c) sqrt(c) * eta / (e_r^{-2} - e_r^2)
    // with eps(c)sqrt(c) the Gauss sum and
    // 1/(e_r^{-2} - e_r^2) = -(1/r) sum_j j zeta_r^{4j+2}.
    int sign0 = (((r - 1) / 2) % 2 != 0 && ((c - 1) / 2) % 2 != 0) ? -1 : 1;
    const int j1 = jacobi(pc, rc);
    const int j2 = jacobi(q, c);
    const Integer big_x = q + q_star - eta * p_star * p;
    const Integer base = a + bez.b_prime * big_x * rc + Integer(-2 * eta) * bez.a_prime * pc;

    detail::CycloBuilder b(n);
    for (long j = 0; j < r; ++j)
        if (j != 0) b.add_term(p * (4 * j + 2), j);
    // multiply by the Gauss sum of conductor c embedded at pr/c
    const Integer stride = (p * r) / c;
    std::vector<std::pair<Integer, long long>> gauss_terms;
    gauss_terms.reserve(c.get_si());
    for (long j = 0; j < c.get_si(); ++j)
        gauss_terms.emplace_back(Integer(j) * Integer(j) * stride, 1);
    b.multiply_sparse(gauss_terms);
    b.multiply_monomial(base, 1);

    const Rational scale = make_rational(Integer(-sign0 * j1 * j2 * eta), Integer(r));
    t.value = b.to_element(scale);
    t.value_approx = t.value.to_complex();
    return t;
}

}  // namespace detail

XiTrace xi(const LensSpace& L, long r) { return detail::xi_shifted(L, r, 0); }

namespace {

// Closed-form inverse of a nonzero xi value, as (scale, sparse terms) of
// the same conductor. Uses inv(Gauss_c) = +-Gauss_c/c and
// 1/(sum_{j<p'} zeta_r^{4j}) = (zeta_r^4 - 1)(-1/r) sum_j j zeta_r^{4p'j}.
struct SparseValue {
    long conductor;
    Rational scale;
    std::vector<std::pair<Integer, long long>> terms;
};

SparseValue xi_factored_inverse(const LensSpace& L, const XiTrace& t) {
    const Integer& p = L.p();
    const Integer& q = L.q();
    const long r = t.r;
    SparseValue out;

    if (t.case_tag == XiCase::Sphere) {
        out.conductor = r;
        out.scale = 1;
        out.terms.emplace_back(Integer(0), 1);
        return out;
    }
    const long n = ambient_conductor(p, r);
    out.conductor = n;
    const Integer a = framing_exponent(q, p);

    if (t.case_tag == XiCase::C1) {
        const Integer& r_prime = *t.r_prime;
        const Integer& p_prime = *t.p_prime;
        const int kappa = jacobi(p, Integer(r));
        const Integer base = a + Integer(r) * r_prime * (q + *t.q_star) + p * (2 - 2 * p_prime);
        // value = kappa zeta^base S with S = sum_{j<p'} zeta_r^{4j}
        //       = kappa zeta^base (zeta_r^{4p'} - 1)/(zeta_r^4 - 1);
        // 1/S = (zeta_r^4 - 1) (1/r) sum_{j<r} j zeta_r^{4p'j}, and 1/kappa = kappa.
        out.scale = make_rational(Integer(kappa), Integer(r));
        for (long j = 1; j < r; ++j) {
            Integer e = -base + 4 * p_prime * j * p;
            out.terms.emplace_back(e + 4 * p, j);
            out.terms.emplace_back(e, -j);
        }
        return out;
    }

    // CGt1Eta
    const Integer& c = t.c;
    const Integer pc = p / c;
    const Integer rc = Integer(r) / c;
    const BezoutPair& bez = *t.bezout;
    const int eta = t.eta;
    int sign0 = (((r - 1) / 2) % 2 != 0 && ((c - 1) / 2) % 2 != 0) ? -1 : 1;
    const int j1 = jacobi(pc, rc);
    const int j2 = jacobi(q, c);
    const Integer big_x = q + *t.q_star - eta * (*t.p_star) * p;
    const Integer base = a + bez.b_prime * big_x * rc + Integer(-2 * eta) * bez.a_prime * pc;

    // value = kappa zeta^base G_c W with kappa = -sign0 j1 j2 eta / r and
    // W = sum_j j zeta_r^{4j+2} = -r zeta_r^2/(1 - zeta_r^4). Then
    //   inv(G_c) = eps2 G_c / c, eps2 = +1 for c = 1 (4), -1 for c = 3 (4),
    //   inv(W)   = (zeta_r^{-2} - zeta_r^2)/(-r),
    // and the scales collect to sign0 j1 j2 eta eps2 / c.
    const int eps2 = (mpz_fdiv_ui(c.get_mpz_t(), 4) == 1) ? 1 : -1;
    out.scale = make_rational(Integer(sign0 * j1 * j2 * eta * eps2), c);
    const Integer stride = (p * r) / c;
    for (long j = 0; j < c.get_si(); ++j) {
        Integer g = Integer(j) * Integer(j) * stride - base;
        out.terms.emplace_back(g - 2 * p, 1);
        out.terms.emplace_back(g + 2 * p, -1);
    }
    return out;
}

}  // namespace

CycloElement xi_ratio(const LensSpace& L1, const LensSpace& L2, long r) {
    XiTrace t2 = xi(L2, r);
    if (t2.value.is_zero())
        throw std::domain_error(
            "xi_ratio: denominator xi is zero (case ZERO: c = gcd(p,r) > 1 divides "
            "neither q*+1 nor q*-1)");
    XiTrace t1 = xi(L1, r);
    SparseValue inv = xi_factored_inverse(L2, t2);

    const long n1 = t1.value.conductor();
    const long n = std::lcm(n1, inv.conductor);
    const long s1 = n / n1;
    const long s2 = n / inv.conductor;

    // dense (value1) x sparse (closed-form inverse of value2), one reduction
    std::vector<Rational> raw(n, Rational(0));
    const auto& dense = t1.value.coeffs();
    Integer nn(n);
    for (const auto& [e_raw, coef] : inv.terms) {
        if (coef == 0) continue;
        Integer e;
        mpz_mod(e.get_mpz_t(), Integer(e_raw * s2).get_mpz_t(), nn.get_mpz_t());
        long shift = e.get_si();
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (dense[i] == 0) continue;
            long k = (static_cast<long>(i) * s1 + shift) % n;
            raw[k] += dense[i] * static_cast<long>(coef);
        }
    }
    CycloElement prod = CycloElement::from_coeffs(n, std::move(raw));
    return prod * inv.scale;
}

bool xi_equal(const LensSpace& L1, const LensSpace& L2, long r) {
    return xi(L1, r).value == xi(L2, r).value;
}

// ---------------------------------------------------------------------------
// Ohtsuki tau series
// ---------------------------------------------------------------------------

namespace {

using Series = std::vector<Rational>;  // coefficients of h^0..h^N

// (1+h)^alpha truncated at h^order.
Series binomial_series(const Rational& alpha, int order) {
    Series s(order + 1);
    s[0] = 1;
    for (int k = 1; k <= order; ++k)
        s[k] = s[k - 1] * (alpha - (k - 1)) / k;
    return s;
}

Series series_mul(const Series& x, const Series& y, int order) {
    Series z(order + 1, Rational(0));
    for (int i = 0; i <= order; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j)
            if (y[j] != 0) z[i + j] += x[i] * y[j];
    }
    return z;
}

// x / y with y[0] != 0.
Series series_div(const Series& x, const Series& y, int order) {
    Series z(order + 1, Rational(0));
    for (int k = 0; k <= order; ++k) {
        Rational acc = x[k];
        for (int i = 0; i < k; ++i)
            if (z[i] != 0 && y[k - i] != 0) acc -= z[i] * y[k - i];
        z[k] = acc / y[0];
    }
    return z;
}

}  // namespace

TauSeries tau_series(const LensSpace& L, int order) {
    if (order < 0) throw std::domain_error("tau_series: order must be >= 0");
    const Integer& p = L.p();
    const Integer& q = L.q();
    const Rational neg3s = -3 * dedekind_fast(q, p);
    const Rational half_p = make_rational(1, 2 * p);
    const Rational half = make_rational(1, 2);

    // numerator t^{1/2p} - t^{-1/2p} and denominator t^{1/2} - t^{-1/2}
    // both vanish at h = 0; one factor of h cancels before division.
    Series num_full = binomial_series(half_p, order + 1);
    Series num_neg = binomial_series(-half_p, order + 1);
    Series den_full = binomial_series(half, order + 1);
    Series den_neg = binomial_series(-half, order + 1);
    Series num(order + 1), den(order + 1);
    for (int k = 0; k <= order; ++k) {
        num[k] = num_full[k + 1] - num_neg[k + 1];
        den[k] = den_full[k + 1] - den_neg[k + 1];
    }

    Series quotient = series_div(num, den, order);
    Series lambda = series_mul(binomial_series(neg3s, order), quotient, order);

    TauSeries out;
    out.p = p;
    out.q = q;
    out.lambda = std::move(lambda);
    return out;
}

bool tau_equal(const LensSpace& L1, const LensSpace& L2) {
    if (L1.p() != L2.p()) return false;
    return dedekind_fast(L1.q(), L1.p()) == dedekind_fast(L2.q(), L2.p());
}

bool oriented_homeomorphic(const LensSpace& L1, const LensSpace& L2) {
    if (L1.p() != L2.p()) return false;
    if (L1.p() == 1) return true;
    if (L1.q() == L2.q()) return true;
    return L2.q() == mod_inverse(L1.q(), L1.p());
}

bool tau_denominators_supported(const TauSeries& t) {
    // collect the allowed primes: 2 and the prime factors of p
    std::vector<Integer> primes{Integer(2)};
    Integer m = t.p;
    for (Integer d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) primes.push_back(m);

    for (const auto& lam : t.lambda) {
        Integer den = lam.get_den();
        for (const auto& pr : primes)
            while (den % pr == 0) den /= pr;
        if (den != 1) return false;
    }
    return true;
}

}  // namespace lensinv
