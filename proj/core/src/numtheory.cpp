#include "lensinv/numtheory.hpp"

#include <iterator>
#include <utility>

namespace lensinv {

EgcdResult egcd(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) throw std::domain_error("egcd: both inputs zero");
    EgcdResult r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    if (m < 2) throw std::domain_error("mod_inverse: modulus must be >= 2");
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("mod_inverse: gcd(" + a.get_str() + ", " + m.get_str() + ") != 1");
    // mpz_invert returns a value in [0, m); 0 is impossible since m >= 2.
    return inv;
}

BezoutPair bezout_pair(const Integer& a, const Integer& b) {
    EgcdResult e = egcd(a, b);
    if (e.g != 1)
        throw std::domain_error("bezout_pair: gcd(" + a.get_str() + ", " + b.get_str() + ") != 1");
    BezoutPair out{e.x, e.y, a, b};
    if (a != 0) {
        Integer abs_a = abs(a);
        Integer bp;
        mpz_mod(bp.get_mpz_t(), out.b_prime.get_mpz_t(), abs_a.get_mpz_t());
        out.b_prime = bp;
        out.a_prime = (1 - out.b_prime * b) / a;  // exact
    }
    return out;
}

int jacobi(const Integer& a, const Integer& n) {
    if (n <= 0 || n % 2 == 0)
        throw std::domain_error("jacobi: modulus must be odd and positive, got " + n.get_str());
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

Integer NegContFrac::term_sum() const {
    Integer s = 0;
    for (const auto& m : terms) s += m;
    return s;
}

Rational NegContFrac::evaluate() const {
    if (terms.empty()) throw std::domain_error("NegContFrac: empty term list");
    // innermost term last: fold right-to-left.
    Rational acc(terms.back());
    for (auto it = std::next(terms.rbegin()); it != terms.rend(); ++it) {
        if (acc == 0) throw std::domain_error("NegContFrac: zero partial tail");
        acc = Rational(*it) - 1 / acc;
    }
    return acc;
}

NegContFrac neg_cont_frac(const Integer& p, const Integer& q) {
    if (!(q > 0 && q < p))
        throw std::domain_error("neg_cont_frac: need 0 < q < p");
    if (gcd(p, q) != 1)
        throw std::domain_error("neg_cont_frac: gcd(p, q) != 1");
    NegContFrac out;
    out.p = p;
    out.q = q;
    Integer a = p, b = q;
    while (b != 0) {
        Integer m, rem;
        mpz_cdiv_qr(m.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        out.terms.push_back(m);
        // ceil division: a = m*b + rem with rem in (-b, 0]; next pair is (b, -rem) = (b, m*b - a)
        a = b;
        b = -rem;
    }
    return out;
}

namespace {

void mpz_set_sll(Integer& z, long long v) {
    if (v >= 0) {
        z = Integer(static_cast<unsigned long>(v));
    } else {
        z = Integer(static_cast<unsigned long>(-(v + 1)));
        z = -z - 1;
    }
}

// Reduces q into [0, p) and validates gcd; p = 1 maps everything to s = 0.
bool reduce_args(Integer& q, const Integer& p) {
    if (p < 1) throw std::domain_error("dedekind sum: p must be positive");
    if (p == 1) return false;  // s(*, 1) = 0
    Integer qr;
    mpz_mod(qr.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    q = qr;
    if (gcd(p, q) != 1)
        throw std::domain_error("dedekind sum: gcd(p, q) != 1");
    return true;
}

}  // namespace

Rational dedekind_direct(const Integer& q0, const Integer& p) {
    Integer q = q0;
    if (!reduce_args(q, p)) return Rational(0);
    // 4*p^2*s = sum_{k=1}^{p-1} (2k - p)(2(kq mod p) - p), all integer.
    if (p.fits_slong_p() && p.get_si() < (1L << 20)) {
        long pl = p.get_si(), ql = q.get_si();
        long long acc = 0;
        long m = 0;
        for (long k = 1; k < pl; ++k) {
            m += ql;
            if (m >= pl) m -= pl;
            acc += static_cast<long long>(2 * k - pl) * (2 * m - pl);
        }
        Integer num;
        mpz_set_sll(num, acc);
        return make_rational(num, 4 * p * p);
    }
    Integer acc = 0;
    Integer m = 0;
    for (Integer k = 1; k < p; ++k) {
        m += q;
        if (m >= p) m -= p;
        acc += (2 * k - p) * (2 * m - p);
    }
    return make_rational(acc, 4 * p * p);
}

Rational dedekind_hickerson(const Integer& q0, const Integer& p) {
    Integer q = q0;
    if (!reduce_args(q, p)) return Rational(0);
    NegContFrac cf = neg_cont_frac(p, q);
    Integer q_star = mod_inverse(q, p);
    Integer n(static_cast<unsigned long>(cf.length()));
    Rational twelve_s = Rational(cf.term_sum()) + make_rational(q + q_star, p) - 3 * n;
    return twelve_s / 12;
}

Rational dedekind_fast(const Integer& q0, const Integer& p0) {
    Integer q = q0;
    if (!reduce_args(q, p0)) return Rational(0);
    // s(q,p) = -s(p mod q, q) - 1/4 + (p/q + q/p + 1/(pq))/12, s(0,1) = 0.
    Rational s = 0;
    Integer p = p0;
    int sign = 1;
    while (q != 0) {
        // antisymmetry keeps the operands small: s(p-q, p) = -s(q, p)
        if (2 * q > p) {
            q = p - q;
            sign = -sign;
        }
        if (q == 0) break;
        Rational recip = make_rational(p * p + q * q + 1, 12 * p * q) - make_rational(1, 4);
        s += sign * recip;
        sign = -sign;
        Integer rem;
        mpz_mod(rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        p = q;
        q = rem;
    }
    return s;
}

DedekindSum dedekind_sum(const Integer& q, const Integer& p, DedekindMethod method) {
    Rational v;
    switch (method) {
        case DedekindMethod::Direct: v = dedekind_direct(q, p); break;
        case DedekindMethod::Hickerson: v = dedekind_hickerson(q, p); break;
        case DedekindMethod::Fast: v = dedekind_fast(q, p); break;
    }
    return DedekindSum{p, q, v};
}

}  // namespace lensinv
