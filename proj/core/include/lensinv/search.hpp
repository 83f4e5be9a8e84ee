#pragma once

#include <vector>

#include "lensinv/lens.hpp"

namespace lensinv {

/// A tau-indistinguishable, non-homeomorphic lens space pair together with
/// the classification of odd levels r by whether xi_r separates it.
struct PairReport {
    Integer p;
    Integer q1;
    Integer q2;
    Rational dedekind_value;             // shared s(q1,p) = s(q2,p)
    std::vector<long> distinguishing_r;  // xi_equal false
    std::vector<long> agreeing_r;        // xi_equal true
    std::vector<long> all_zero_r;        // both values exactly 0 (subset of agreeing)
};

struct TauTwin {
    Integer p;
    Integer q1;
    Integer q2;
};

/// All triples (p, q1, q2) with 2 <= p <= p_max, 0 < q1 < q2 < p, both
/// coprime to p, equal Dedekind sums, and L(p,q1) not oriented-homeomorphic
/// to L(p,q2). Sorted lexicographically; deterministic.
std::vector<TauTwin> find_tau_twins(const Integer& p_max);

/// Buckets every odd r in [3, r_max] for the given twin.
/// Throws std::domain_error when (p, q1, q2) is not a valid twin.
PairReport classify_pair(const Integer& p, const Integer& q1, const Integer& q2, long r_max);

}  // namespace lensinv
