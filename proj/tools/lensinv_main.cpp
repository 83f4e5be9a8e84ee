// lensinv: exact quantum invariants of lens spaces on the command line.
//
// Exit codes: 0 success, 1 domain error (message on stderr), 2 internal
// cross-check failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <lensinv/lens.hpp>
#include <lensinv/search.hpp>

using json = nlohmann::ordered_json;
using namespace lensinv;

namespace {

struct Options {
    bool as_json = false;
    int precision = 12;
};

std::string format_double(double v, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

std::string format_complex(std::complex<double> z, int digits) {
    std::string re = format_double(z.real(), digits);
    std::string im = format_double(std::abs(z.imag()), digits);
    return re + (z.imag() < 0 ? " - " : " + ") + im + "i";
}

json cyclo_to_json(const CycloElement& x) {
    json terms = json::array();
    const auto& c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) terms.push_back(json::array({i, to_string(c[i])}));
    return json{{"conductor", x.conductor()}, {"terms", std::move(terms)}};
}

std::string cyclo_to_text(const CycloElement& x) {
    if (x.is_zero()) return "0  (conductor " + std::to_string(x.conductor()) + ")";
    std::ostringstream os;
    os << "conductor " << x.conductor() << ", [";
    bool first = true;
    const auto& c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << ", ";
        os << i << ": " << to_string(c[i]);
        first = false;
    }
    os << "]";
    return os.str();
}

json complex_to_json(std::complex<double> z) {
    return json::array({z.real(), z.imag()});
}

json trace_to_json(const XiTrace& t) {
    json tr;
    tr["case"] = to_string(t.case_tag);
    tr["c"] = to_string(t.c);
    tr["eta"] = t.eta;
    if (t.q_star) tr["q_star"] = to_string(*t.q_star);
    if (t.p_star) tr["p_star"] = to_string(*t.p_star);
    if (t.r_prime) tr["r_prime"] = to_string(*t.r_prime);
    if (t.p_prime) tr["p_prime"] = to_string(*t.p_prime);
    if (t.bezout) {
        tr["bezout"] = json{{"a_prime", to_string(t.bezout->a_prime)},
                            {"b_prime", to_string(t.bezout->b_prime)},
                            {"a", to_string(t.bezout->a)},
                            {"b", to_string(t.bezout->b)}};
    }
    return tr;
}

void emit(const Options& opt, const json& record, const std::string& text) {
    if (opt.as_json)
        std::cout << record.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

long parse_level(const std::string& s) {
    Integer r = parse_integer(s);
    if (r < 3 || r % 2 == 0) throw std::domain_error("level r must be odd and >= 3");
    return to_long(r);
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_dedekind(const Options& opt, const std::string& ps, const std::string& qs,
                 const std::string& method) {
    Integer p = parse_integer(ps), q = parse_integer(qs);
    Rational value;
    if (method == "all") {
        Rational d = dedekind_direct(q, p);
        Rational h = dedekind_hickerson(q, p);
        Rational f = dedekind_fast(q, p);
        if (d != h || d != f) {
            std::cerr << "cross-check failure: direct=" << to_string(d)
                      << " hickerson=" << to_string(h) << " fast=" << to_string(f) << "\n";
            return 2;
        }
        value = d;
    } else if (method == "direct") {
        value = dedekind_direct(q, p);
    } else if (method == "hickerson") {
        value = dedekind_hickerson(q, p);
    } else {
        value = dedekind_fast(q, p);
    }
    json rec{{"command", "dedekind"},
             {"inputs", {{"p", to_string(p)}, {"q", to_string(q)}, {"method", method}}},
             {"exact", to_string(value)},
             {"approx", value.get_d()}};
    emit(opt, rec, to_string(value));
    return 0;
}

int cmd_contfrac(const Options& opt, const std::string& ps, const std::string& qs) {
    Integer p = parse_integer(ps), q = parse_integer(qs);
    NegContFrac cf = neg_cont_frac(p, q);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < cf.terms.size(); ++i)
        os << (i ? ", " : "") << to_string(cf.terms[i]);
    os << "]";
    json terms = json::array();
    for (const auto& m : cf.terms) terms.push_back(to_string(m));
    json rec{{"command", "contfrac"},
             {"inputs", {{"p", to_string(p)}, {"q", to_string(q)}}},
             {"exact", {{"terms", terms}, {"n", cf.length()}}},
             {"approx", Rational(p).get_d() / Rational(q).get_d()}};
    emit(opt, rec, os.str() + "\nn = " + std::to_string(cf.length()));
    return 0;
}

int cmd_jacobi(const Options& opt, const std::string& as, const std::string& ns) {
    Integer a = parse_integer(as), n = parse_integer(ns);
    int v = jacobi(a, n);
    json rec{{"command", "jacobi"},
             {"inputs", {{"a", to_string(a)}, {"n", to_string(n)}}},
             {"exact", v},
             {"approx", v}};
    emit(opt, rec, std::to_string(v));
    return 0;
}

int cmd_xi(const Options& opt, const std::string& ps, const std::string& qs,
           const std::string& rs) {
    LensSpace L = lens_normalize(parse_integer(ps), parse_integer(qs));
    long r = parse_level(rs);
    XiTrace t = xi(L, r);
    json rec{{"command", "xi"},
             {"inputs", {{"p", to_string(L.p())}, {"q", to_string(L.q())}, {"r", r}}},
             {"exact", cyclo_to_json(t.value)},
             {"approx", complex_to_json(t.value_approx)},
             {"trace", trace_to_json(t)}};
    std::ostringstream os;
    os << "case: " << to_string(t.case_tag) << "\n";
    os << "c = " << to_string(t.c) << ", eta = " << t.eta;
    if (t.q_star) os << ", q* = " << to_string(*t.q_star);
    if (t.p_star) os << ", p* = " << to_string(*t.p_star);
    os << "\n";
    if (t.r_prime) os << "r' = " << to_string(*t.r_prime) << ", p' = " << to_string(*t.p_prime) << "\n";
    if (t.bezout)
        os << "(p/c)' = " << to_string(t.bezout->a_prime)
           << ", (r/c)' = " << to_string(t.bezout->b_prime) << "\n";
    os << "value: " << cyclo_to_text(t.value) << "\n";
    os << "approx: " << format_complex(t.value_approx, opt.precision);
    emit(opt, rec, os.str());
    return 0;
}

int cmd_xi_ratio(const Options& opt, const std::string& ps, const std::string& q1s,
                 const std::string& q2s, const std::string& rs) {
    Integer p = parse_integer(ps);
    LensSpace L1 = lens_normalize(p, parse_integer(q1s));
    LensSpace L2 = lens_normalize(p, parse_integer(q2s));
    long r = parse_level(rs);
    CycloElement ratio = xi_ratio(L1, L2, r);
    json rec{{"command", "xi-ratio"},
             {"inputs",
              {{"p", to_string(p)},
               {"q1", to_string(L1.q())},
               {"q2", to_string(L2.q())},
               {"r", r}}},
             {"exact", cyclo_to_json(ratio)},
             {"approx", complex_to_json(ratio.to_complex())}};
    std::ostringstream os;
    os << "value: " << cyclo_to_text(ratio) << "\n";
    os << "approx: " << format_complex(ratio.to_complex(), opt.precision);
    emit(opt, rec, os.str());
    return 0;
}

int cmd_tau(const Options& opt, const std::string& ps, const std::string& qs, int order) {
    LensSpace L = lens_normalize(parse_integer(ps), parse_integer(qs));
    TauSeries t = tau_series(L, order);
    json lambda = json::array();
    for (const auto& l : t.lambda) lambda.push_back(to_string(l));
    json rec{{"command", "tau"},
             {"inputs", {{"p", to_string(L.p())}, {"q", to_string(L.q())}, {"order", order}}},
             {"exact", {{"lambda", lambda}}},
             {"approx", t.lambda[0].get_d()}};
    std::ostringstream os;
    for (int k = 0; k <= t.order(); ++k) {
        if (k) os << "\n";
        os << "lambda_" << k << " = " << to_string(t.lambda[k]);
    }
    emit(opt, rec, os.str());
    return 0;
}

json report_to_json(const PairReport& rep) {
    return json{{"p", to_string(rep.p)},
                {"q1", to_string(rep.q1)},
                {"q2", to_string(rep.q2)},
                {"dedekind", to_string(rep.dedekind_value)},
                {"distinguishing_r", rep.distinguishing_r},
                {"agreeing_r", rep.agreeing_r},
                {"all_zero_r", rep.all_zero_r}};
}

std::string report_to_text(const PairReport& rep) {
    auto list = [](const std::vector<long>& v) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
        os << "]";
        return os.str();
    };
    std::ostringstream os;
    os << "p = " << to_string(rep.p) << ", q1 = " << to_string(rep.q1)
       << ", q2 = " << to_string(rep.q2) << ", s = " << to_string(rep.dedekind_value) << "\n";
    os << "  distinguishing_r: " << list(rep.distinguishing_r) << "\n";
    os << "  agreeing_r: " << list(rep.agreeing_r) << "\n";
    os << "  all_zero_r: " << list(rep.all_zero_r);
    return os.str();
}

int cmd_compare(const Options& opt, const std::string& ps, const std::string& q1s,
                const std::string& q2s, const std::string& rmaxs) {
    Integer p = parse_integer(ps), q1 = parse_integer(q1s), q2 = parse_integer(q2s);
    long rmax = to_long(parse_integer(rmaxs));
    PairReport rep = classify_pair(p, q1, q2, rmax);
    json rec{{"command", "compare"},
             {"inputs",
              {{"p", to_string(p)}, {"q1", to_string(q1)}, {"q2", to_string(q2)}, {"rmax", rmax}}},
             {"exact", report_to_json(rep)},
             {"approx", nullptr}};
    emit(opt, rec, report_to_text(rep));
    return 0;
}

int cmd_search(const Options& opt, const std::string& pmaxs, const std::string& rmaxs) {
    Integer pmax = parse_integer(pmaxs);
    long rmax = to_long(parse_integer(rmaxs));
    auto twins = find_tau_twins(pmax);
    json reports = json::array();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : twins) {
        PairReport rep = classify_pair(t.p, t.q1, t.q2, rmax);
        reports.push_back(report_to_json(rep));
        if (!first) os << "\n";
        os << report_to_text(rep);
        first = false;
    }
    if (twins.empty()) os << "no pairs found";
    json rec{{"command", "search"},
             {"inputs", {{"pmax", to_string(pmax)}, {"rmax", rmax}}},
             {"exact", {{"pairs", reports}}},
             {"approx", nullptr}};
    emit(opt, rec, os.str());
    return 0;
}

// ---------------------------------------------------------------------------
// verify-theorem: the L(25,6) / L(25,11) story end to end
// ---------------------------------------------------------------------------

int cmd_verify_theorem(const Options& opt) {
    const LensSpace L6 = lens_normalize(25, 6);
    const LensSpace L11 = lens_normalize(25, 11);
    int failures = 0;
    json claims = json::array();
    auto claim = [&](const std::string& name, bool ok) {
        std::ostringstream os;
        os << (ok ? "PASS" : "FAIL") << ": " << name;
        if (!opt.as_json) std::cout << os.str() << "\n";
        claims.push_back(json{{"claim", name}, {"ok", ok}});
        if (!ok) ++failures;
    };

    {
        Rational expect = make_rational(-4, 25);
        bool ok = dedekind_direct(6, 25) == expect && dedekind_hickerson(6, 25) == expect &&
                  dedekind_fast(6, 25) == expect && dedekind_direct(11, 25) == expect &&
                  dedekind_hickerson(11, 25) == expect && dedekind_fast(11, 25) == expect &&
                  12 * expect == Rational(-3) + make_rational(27, 25);
        claim("s(6,25) = s(11,25) = -4/25 by all three methods; 12s = -3 + 27/25", ok);
    }
    {
        NegContFrac a = neg_cont_frac(25, 6), b = neg_cont_frac(25, 11);
        std::vector<Integer> ea{5, 2, 2, 2, 2, 2}, eb{3, 2, 2, 3, 2};
        bool ok = a.terms == ea && b.terms == eb && mod_inverse(6, 25) == 21 &&
                  mod_inverse(11, 25) == 16;
        claim("expansions 25/6 = [5,2,2,2,2,2], 25/11 = [3,2,2,3,2]; 6* = 21, 11* = 16", ok);
    }
    {
        bool ok = true;
        for (long r = 3; r <= 199; r += 2)
            if (r % 5 != 0 && !xi_equal(L6, L11, r)) ok = false;
        claim("xi_r(L(25,6)) = xi_r(L(25,11)) for all odd r in [3,199] with gcd(r,25) = 1", ok);
    }
    {
        bool ok = true;
        for (long r = 5; r <= 199; r += 2) {
            if (r % 5 != 0 || r % 25 == 0) continue;
            if (xi_equal(L6, L11, r)) ok = false;
            CycloElement ratio = xi_ratio(L11, L6, r);
            BezoutPair bez = bezout_pair(Integer(5), Integer(r / 5));
            CycloElement expected =
                root_of_unity(125, bez.b_prime * -50).embed(ratio.conductor());
            if (ratio != expected || ratio.is_one()) ok = false;
        }
        claim("for gcd(r,25) = 5 the xi differ and the ratio is e_125^(-50*(r/5)') != 1", ok);
    }
    {
        bool ok = true;
        for (long r : {25L, 75L, 125L, 175L}) {
            XiTrace a = xi(L6, r), b = xi(L11, r);
            if (!(a.case_tag == XiCase::Zero && b.case_tag == XiCase::Zero &&
                  a.value.is_zero() && b.value.is_zero()))
                ok = false;
        }
        claim("for gcd(r,25) = 25 both xi vanish (25 divides neither 21+-1 nor 16+-1)", ok);
    }
    {
        TauSeries a = tau_series(L6, 20), b = tau_series(L11, 20);
        claim("tau(L(25,6)) = tau(L(25,11)) coefficient-wise to order 20",
              a.lambda == b.lambda && tau_equal(L6, L11));
    }
    {
        auto twins = find_tau_twins(25);
        bool found = false;
        for (const auto& t : twins)
            if (t.p == 25 && t.q1 == 6 && t.q2 == 11) found = true;
        PairReport rep = classify_pair(25, 6, 11, 75);
        bool buckets = true;
        for (long r = 3; r <= 75; r += 2) {
            long g = std::gcd(r, 25L);
            const auto& want = (g == 5) ? rep.distinguishing_r : rep.agreeing_r;
            if (std::find(want.begin(), want.end(), r) == want.end()) buckets = false;
            bool zero = std::find(rep.all_zero_r.begin(), rep.all_zero_r.end(), r) !=
                        rep.all_zero_r.end();
            if (zero != (g == 25)) buckets = false;
        }
        claim("search finds (25,6,11); levels bucket exactly by gcd(r,25) in [3,75]", found && buckets);
    }

    if (opt.as_json) {
        json rec{{"command", "verify-theorem"},
                 {"inputs", json::object()},
                 {"exact", {{"claims", claims}, {"failures", failures}}},
                 {"approx", nullptr}};
        std::cout << rec.dump(2) << "\n";
    } else {
        std::cout << (failures == 0 ? "all claims verified" : "FAILURES: " + std::to_string(failures))
                  << "\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SO(3) quantum invariants of lens spaces"};
    app.require_subcommand(1);
    // global flags may appear after the subcommand
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.as_json, "emit a machine-readable JSON record");
    app.add_option("--precision", opt.precision, "significant digits for float rendering")
        ->check(CLI::Range(1, 17));

    std::string a1, a2, a3, a4;
    std::string method = "fast";
    int order = 0;

    auto* dedekind = app.add_subcommand("dedekind", "Dedekind sum s(q,p)");
    dedekind->add_option("p", a1)->required();
    dedekind->add_option("q", a2)->required();
    dedekind->add_option("--method", method, "direct|hickerson|fast|all")
        ->check(CLI::IsMember({"direct", "hickerson", "fast", "all"}));

    auto* contfrac = app.add_subcommand("contfrac", "negative continued fraction of p/q");
    contfrac->add_option("p", a1)->required();
    contfrac->add_option("q", a2)->required();

    auto* jac = app.add_subcommand("jacobi", "Jacobi symbol (a/n)");
    jac->add_option("a", a1)->required();
    jac->add_option("n", a2)->required();

    auto* xi_cmd = app.add_subcommand("xi", "xi_r(L(p,q), e_r), exact with trace");
    xi_cmd->add_option("p", a1)->required();
    xi_cmd->add_option("q", a2)->required();
    xi_cmd->add_option("r", a3)->required();

    auto* ratio = app.add_subcommand("xi-ratio", "xi_r(L(p,q1)) / xi_r(L(p,q2))");
    ratio->add_option("p", a1)->required();
    ratio->add_option("q1", a2)->required();
    ratio->add_option("q2", a3)->required();
    ratio->add_option("r", a4)->required();

    auto* tau = app.add_subcommand("tau", "Ohtsuki series coefficients lambda_0..lambda_N");
    tau->add_option("p", a1)->required();
    tau->add_option("q", a2)->required();
    tau->add_option("--order", order, "truncation order N")->required()->check(CLI::Range(0, 4096));

    auto* compare = app.add_subcommand("compare", "bucket odd levels r for a tau twin");
    compare->add_option("p", a1)->required();
    compare->add_option("q1", a2)->required();
    compare->add_option("q2", a3)->required();
    compare->add_option("--rmax", a4, "largest level to test")->required();

    auto* search = app.add_subcommand("search", "find and classify tau twins");
    search->add_option("--pmax", a1)->required();
    search->add_option("--rmax", a2)->required();

    auto* verify = app.add_subcommand("verify-theorem", "check the L(25,6)/L(25,11) claims");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? 0 : 1;
    }

    try {
        if (dedekind->parsed()) return cmd_dedekind(opt, a1, a2, method);
        if (contfrac->parsed()) return cmd_contfrac(opt, a1, a2);
        if (jac->parsed()) return cmd_jacobi(opt, a1, a2);
        if (xi_cmd->parsed()) return cmd_xi(opt, a1, a2, a3);
        if (ratio->parsed()) return cmd_xi_ratio(opt, a1, a2, a3, a4);
        if (tau->parsed()) return cmd_tau(opt, a1, a2, order);
        if (compare->parsed()) return cmd_compare(opt, a1, a2, a3, a4);
        if (search->parsed()) return cmd_search(opt, a1, a2);
        if (verify->parsed()) return cmd_verify_theorem(opt);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
