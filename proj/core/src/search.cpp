#include "lensinv/search.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace lensinv {

std::vector<TauTwin> find_tau_twins(const Integer& p_max) {
    if (p_max < 2) throw std::domain_error("find_tau_twins: p_max must be >= 2");
    std::vector<TauTwin> out;
    for (Integer p = 2; p <= p_max; ++p) {
        // group residues by exact Dedekind value, then pair within groups
        std::map<Rational, std::vector<Integer>> by_sum;
        for (Integer q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            by_sum[dedekind_fast(q, p)].push_back(q);
        }
        for (const auto& [value, qs] : by_sum) {
            for (std::size_t i = 0; i < qs.size(); ++i) {
                for (std::size_t j = i + 1; j < qs.size(); ++j) {
                    LensSpace a = lens_normalize(p, qs[i]);
                    LensSpace b = lens_normalize(p, qs[j]);
                    if (oriented_homeomorphic(a, b)) continue;
                    // re-validate the reported invariants on output
                    if (!tau_equal(a, b)) continue;
                    out.push_back(TauTwin{p, qs[i], qs[j]});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const TauTwin& a, const TauTwin& b) {
        return std::tie(a.p, a.q1, a.q2) < std::tie(b.p, b.q1, b.q2);
    });
    return out;
}

PairReport classify_pair(const Integer& p, const Integer& q1, const Integer& q2, long r_max) {
    LensSpace a = lens_normalize(p, q1);
    LensSpace b = lens_normalize(p, q2);
    if (q1 <= 0 || q2 <= 0 || q1 >= p || q2 >= p || q1 >= q2)
        throw std::domain_error("classify_pair: need 0 < q1 < q2 < p");
    if (!tau_equal(a, b))
        throw std::domain_error("classify_pair: s(q1,p) != s(q2,p), not a tau twin");
    if (oriented_homeomorphic(a, b))
        throw std::domain_error("classify_pair: L(p,q1) and L(p,q2) are oriented-homeomorphic");

    PairReport report;
    report.p = p;
    report.q1 = q1;
    report.q2 = q2;
    report.dedekind_value = dedekind_fast(q1, p);
    for (long r = 3; r <= r_max; r += 2) {
        XiTrace xa = xi(a, r);
        XiTrace xb = xi(b, r);
        if (xa.value == xb.value) {
            report.agreeing_r.push_back(r);
            if (xa.value.is_zero() && xb.value.is_zero()) report.all_zero_r.push_back(r);
        } else {
            report.distinguishing_r.push_back(r);
        }
    }
    return report;
}

}  // namespace lensinv
