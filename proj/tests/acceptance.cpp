// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "fordcf/continued_fraction.hpp"
#include "fordcf/ford.hpp"
#include "fordcf/svg.hpp"
#include "fordcf/verify.hpp"

#include "oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

using namespace fordcf;

namespace {

int failures = 0;

void report(bool ok, const std::string& id, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << "  " << detail << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

Rational r(long p, long q) {
    return make_rational(p, q);
}

struct Named {
    std::string name;
    RealNumber value;
    std::vector<Integer> terms;  // reference partial quotients
};

std::vector<Named> irrationals() {
    // golden = (1 + sqrt 5)/2 from a 400 digit truncation
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 400);
    Integer big = Integer(5) * scale * scale, root;
    mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
    return {
        {"golden", golden_ratio(), oracle::euclid_terms(root + scale, 2 * scale, 60)},
        {"sqrt2", sqrt_real(2), oracle::sqrt_terms(2, 60)},
        {"sqrt3", sqrt_real(3), oracle::sqrt_terms(3, 60)},
    };
}

// convergents from reference terms
std::vector<Rational> reference_convergents(const std::vector<Integer>& terms, std::size_t count) {
    std::vector<Rational> out;
    Integer a_prev = 1, b_prev = 0, a = terms[0], b = 1;
    out.push_back(make_rational(a, b));
    for (std::size_t i = 1; i < count; ++i) {
        Integer a_next = terms[i] * a + a_prev, b_next = terms[i] * b + b_prev;
        a_prev = a;
        b_prev = b;
        a = a_next;
        b = b_next;
        out.push_back(make_rational(a, b));
    }
    return out;
}

std::size_t ac2_mismatches_d = 0;
std::size_t ac2_pairs = 0;

void ac1(std::size_t& mismatches_d, std::size_t& pairs) {
    SweepParams p;
    p.max_den_x = 30;
    p.max_den_alpha = 30;
    p.lo = 0;
    p.hi = 2;
    p.threads = std::max(1u, std::thread::hardware_concurrency());
    auto start = std::chrono::steady_clock::now();
    SweepReport rep = verify_sweep(p);
    double elapsed = seconds_since(start);
    mismatches_d = rep.proposition_d_mismatches;
    pairs = rep.total_checked;
    bool ok = rep.inconsistencies.empty() && rep.convergent_count_mismatches == 0 &&
              rep.total_checked > 0 && elapsed < 120;
    report(ok, "AC1 equivalence sweep 30x30 over 0..2",
           std::to_string(rep.total_checked) + " pairs, " +
               std::to_string(rep.inconsistencies.size()) + " inconsistencies, " +
               fmt_seconds(elapsed));
}

void ac2() {
    std::size_t conv_checked = 0, non_checked = 0, bad = 0;
    for (const Named& n : irrationals()) {
        std::vector<Rational> convs = reference_convergents(n.terms, 20);
        for (std::size_t i = 0; i < 10; ++i) {
            if (convs[i].is_integer()) continue;
            TheoremUReport rep = theorem_u_check(convs[i], n.value);
            ++conv_checked;
            ++ac2_pairs;
            if (rep.stmt_iii != rep.stmt_iv) ++ac2_mismatches_d;
            if (!(rep.stmt_i && rep.stmt_iii && rep.stmt_iv && rep.stmt_v)) {
                ++bad;
                std::cout << "  convergent " << to_string(convs[i]) << " of " << n.name
                          << " failed\n";
            }
        }
        std::set<Rational> conv_set(convs.begin(), convs.end());
        std::size_t taken = 0;
        for (long d = 2; d <= 100 && taken < 50; ++d) {
            Integer fl = floor_multiple(n.value, Integer(d));
            for (Integer c : {fl, Integer(fl + 1)}) {
                if (taken == 50) break;
                if (gcd(c, Integer(d)) != 1) continue;
                Rational x = make_rational(c, Integer(d));
                if (conv_set.count(x)) continue;
                TheoremUReport rep = theorem_u_check(x, n.value);
                ++taken;
                ++non_checked;
                ++ac2_pairs;
                if (rep.stmt_iii != rep.stmt_iv) ++ac2_mismatches_d;
                if (rep.stmt_i || rep.stmt_iii || rep.stmt_iv || rep.stmt_v) {
                    ++bad;
                    std::cout << "  non-convergent " << to_string(x) << " of " << n.name
                              << " reported true\n";
                }
            }
        }
        if (taken < 50) {
            ++bad;
            std::cout << "  only " << taken << " non-convergents for " << n.name << "\n";
        }
    }
    report(bad == 0 && conv_checked > 0, "AC2 irrational equivalence",
           std::to_string(conv_checked) + " convergents, " + std::to_string(non_checked) +
               " non-convergents, " + std::to_string(bad) + " wrong");
}

void ac4() {
    auto start = std::chrono::steady_clock::now();
    auto f = oracle::farey(50);
    std::vector<Rational> pts;
    for (auto [a, b] : f) pts.push_back(r(a, b));
    std::size_t pairs = 0, bad = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            ++pairs;
            long det = f[i].first * f[j].second - f[i].second * f[j].first;
            bool unimodular = det == 1 || det == -1;
            try {
                GapRelation g = gap_relation(pts[i], pts[j]);
                if ((g == GapRelation::TangentEquality) != unimodular) ++bad;
            } catch (const std::exception&) {
                ++bad;
            }
        }
    }
    double elapsed = seconds_since(start);
    report(bad == 0 && pts.size() == 775 && elapsed < 60, "AC4 Ford circles do not overlap (F_50)",
           std::to_string(pts.size()) + " points, " + std::to_string(pairs) + " pairs, " +
               std::to_string(bad) + " wrong, " + fmt_seconds(elapsed));
}

void ac5() {
    auto f = oracle::farey(20);
    std::size_t pairs = 0, bad = 0;
    for (auto [a, b] : f) {
        Rational x = r(a, b);
        Rational rad = r(1, 2 * b * b);
        for (auto [p, q] : f) {
            Rational alpha = r(p, q);
            Rational t = Rational(b) * alpha - Rational(a);
            Rational expected = r(1, 2) * t * t;
            ++pairs;
            RadiusValue got = generic_tangent_radius(x, rad, alpha);
            if (!got.is_rational() || got.rational() != expected) ++bad;
        }
    }
    report(bad == 0, "AC5 tangent horocircle radius is (b alpha - a)^2 / 2",
           std::to_string(pairs) + " pairs, " + std::to_string(bad) + " wrong");
}

bool identities_hold(const std::vector<Convergent>& convs) {
    for (std::size_t n = 1; n < convs.size(); ++n) {
        Integer det = convs[n].A * convs[n - 1].B - convs[n - 1].A * convs[n].B;
        if (abs(det) != 1) return false;
    }
    return true;
}

void ac6() {
    std::size_t checked = 0, bad = 0;
    for (long q = 1; q <= 100; ++q) {
        for (long p = -200; p <= 200; ++p) {
            if (oracle::gcd_l(p, q) != 1) continue;
            Rational x = r(p, q);
            ContinuedFraction cf = cf_of_rational(x);
            auto convs = convergents(cf, cf.last_index() + 1);
            ++checked;
            if (value(cf) != x || !identities_hold(convs) || !convergent_ordering_check(convs, x))
                ++bad;
        }
    }
    for (const Named& n : irrationals()) {
        ContinuedFraction cf = cf_of_real(n.value);
        auto convs = convergents(cf, 30);
        std::vector<Rational> ref = reference_convergents(n.terms, 30);
        ++checked;
        bool same = true;
        for (std::size_t i = 0; i < 30; ++i) same = same && convs[i].value() == ref[i];
        if (!same || !identities_hold(convs) || !convergent_ordering_check(convs, n.value)) ++bad;
    }
    report(bad == 0, "AC6 convergent identities and round trip",
           std::to_string(checked) + " expansions, " + std::to_string(bad) + " wrong");
}

void ac7() {
    std::size_t bad = 0;
    for (long m = -2; m <= 2; ++m) {
        Rational alpha = Rational(m) + r(3, 5);
        if (!is_convergent(Rational(m), alpha) || is_best_approx_2nd(Rational(m), alpha)) ++bad;
        if (is_best_approx_2nd(Rational(m), alpha, CandidateMode::Exhaustive)) ++bad;
    }
    report(bad == 0, "AC7 integer convergent m of m + 3/5 is not a best approximation",
           std::to_string(bad) + " wrong");
}

void ac8() {
    std::size_t checked = 0;
    std::vector<std::string> failed;
    for (auto [a, b] : oracle::farey(50)) {
        if (b == 1) continue;
        Rational alpha = r(a, b);
        ContinuedFraction cf = cf_of_rational(alpha);
        std::size_t n = cf.last_index();
        auto convs = convergents(cf, n + 1);
        Integer u = convs[n].A - convs[n - 1].A;
        Integer v = convs[n].B - convs[n - 1].B;
        ++checked;
        bool ok = gcd(u, v) == 1 && convs[n - 1].B < v && v < convs[n].B &&
                  strictly_between(alpha, convs[n - 1].value(), make_rational(u, v));
        if (!ok) failed.push_back(to_string(alpha));
    }
    std::string detail = std::to_string(checked) + " rationals, " +
                         std::to_string(failed.size()) + " wrong";
    if (!failed.empty()) {
        detail += " (";
        for (std::size_t i = 0; i < failed.size(); ++i) detail += (i ? " " : "") + failed[i];
        detail += ": N = 1 and b_1 = 2 gives v = B_0)";
    }
    report(failed.empty(), "AC8 penultimate construction B_{N-1} < v < B_N", detail);
}

void ac9() {
    RenderSpec spec;
    spec.max_den = 5;
    std::string a = render_ford_field(spec);
    std::string b = render_ford_field(spec);
    std::size_t circles = 0;
    for (auto pos = a.find("<circle"); pos != std::string::npos; pos = a.find("<circle", pos + 1))
        ++circles;
    std::string w = render_statement_v(r(1, 2), r(3, 5), RenderSpec{});
    auto s = w.find("<metadata>") + 10;
    auto meta = nlohmann::json::parse(w.substr(s, w.find("</metadata>") - s));
    bool ok = circles == 11 && a == b && meta["witness"] == "2/3";
    report(ok, "AC9 rendering",
           std::to_string(circles) + " circles, " + (a == b ? "identical" : "different") +
               " reruns, witness " + meta["witness"].get<std::string>());
}

}  // namespace

int main() {
    try {
        std::size_t sweep_d = 0, sweep_pairs = 0;
        ac1(sweep_d, sweep_pairs);
        ac2();
        report(sweep_d == 0 && ac2_mismatches_d == 0, "AC3 best approximation agrees with nearby",
               std::to_string(sweep_pairs + ac2_pairs) + " pairs, " +
                   std::to_string(sweep_d + ac2_mismatches_d) + " disagreements");
        ac4();
        ac5();
        ac6();
        ac7();
        ac8();
        ac9();
    } catch (const std::exception& e) {
        std::cout << "[FAIL] unexpected exception: " << e.what() << std::endl;
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
