#include "fordcf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace fordcf {

namespace {

// Numerators c worth testing at denominator d.
std::vector<Integer> candidate_numerators(const RealNumber& alpha, const Rational& x,
                                          const Integer& d, CandidateMode mode) {
    if (mode == CandidateMode::Pruned) {
        Integer k = floor_multiple(alpha, d);
        return {k, Integer(k + 1)};
    }
    // Box [d L, d U] around both alpha and x, far wider than any violation
    // that could survive the d = 1 check.
    Integer alpha_floor = floor_multiple(alpha, 1);
    Integer lower = std::min(alpha_floor, floor(x)) - 1;
    Integer upper = std::max(Integer(alpha_floor + 1), ceil(x)) + 1;
    std::vector<Integer> out;
    for (Integer c = d * lower; c <= d * upper; ++c) {
        out.push_back(c);
    }
    return out;
}

struct AlphaResult {
    std::size_t checked = 0;
    std::size_t convergent_pairs = 0;
    std::size_t proposition_d_mismatches = 0;
    bool convergent_count_mismatch = false;
    std::vector<TheoremUReport> inconsistencies;
};

AlphaResult sweep_one_alpha(const Rational& alpha, const std::vector<Rational>& xs,
                            const SweepParams& params) {
    AlphaResult result;
    std::size_t hits = 0;
    for (const Rational& x : xs) {
        TheoremUReport report = theorem_u_check(x, alpha, params.mode);
        ++result.checked;
        if (report.stmt_i) ++hits;
        if (report.stmt_iii != report.stmt_iv) ++result.proposition_d_mismatches;
        if (report.stmt_i && report.stmt_iii && report.stmt_iv && report.stmt_v) {
            ++result.convergent_pairs;
        }
        if (!report.consistent) {
            result.inconsistencies.push_back(std::move(report));
        }
    }
    // Cross-check stmt_i against the expansion itself.
    ContinuedFraction cf = cf_of_rational(alpha);
    std::size_t expected = 0;
    Rational x_lo = params.lo - Rational(1);
    Rational x_hi = params.hi + Rational(1);
    for (const Convergent& c : convergents(cf, cf.last_index() + 1)) {
        Rational v = c.value();
        if (!v.is_integer() && c.B <= params.max_den_x && x_lo < v && v < x_hi) {
            ++expected;
        }
    }
    result.convergent_count_mismatch = expected != hits;
    return result;
}

}  // namespace

std::vector<ChainEntry> cf_chain(const RealNumber& alpha, std::size_t count) {
    std::vector<ChainEntry> chain;
    for (Convergent& c : convergents(cf_of_real(alpha), count)) {
        FordCircle circle = ford_circle(c.value());
        std::size_t index = c.index;
        chain.push_back({index, std::move(c), std::move(circle)});
    }
    return chain;
}

bool is_best_approx_2nd(const Rational& x, const RealNumber& alpha, CandidateMode mode) {
    const Integer& a = x.num();
    const Integer& b = x.den();
    for (Integer d = 1; d <= b; ++d) {
        for (const Integer& c : candidate_numerators(alpha, x, d, mode)) {
            if ((d == b && c == a) || !coprime(c, d)) {
                continue;
            }
            // A tie with a different rational also disqualifies x.
            if (compare_linear_forms(d, c, b, a, alpha) <= 0) {
                return false;
            }
        }
    }
    return true;
}

bool is_nearby(const Rational& x, const RealNumber& alpha, CandidateMode mode) {
    const FordCircle cx = ford_circle(x);
    const RadiusValue sx = tangent_horocircle_radius(alpha, x);
    for (Integer d = 1;; ++d) {
        if (ford_circle(make_rational(1, d)).radius < cx.radius) {
            break;
        }
        for (const Integer& c : candidate_numerators(alpha, x, d, mode)) {
            Rational z = make_rational(c, d);
            if (z.den() != d || z == x) {
                continue;  // not a new Ford circle at this radius
            }
            if (!(tangent_horocircle_radius(alpha, z) > sx)) {
                return false;
            }
        }
    }
    return true;
}

Rational smallest_larger_tangent_neighbor(const Rational& x, bool right_side) {
    const Integer& a = x.num();
    const Integer& b = x.den();
    // Right neighbours c/d satisfy c b - a d = 1, left ones a d - c b = 1;
    // d0 is the least positive solution and the rest are d0 + k b.
    Integer d0 = 1;
    if (b > 1) {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        d0 = right_side ? Integer(b - inv) : inv;
        if (d0 == b) d0 = 0;
    }
    Integer c0 = right_side ? Integer((1 + a * d0) / b) : Integer((a * d0 - 1) / b);
    Integer d = d0 + b;
    Integer c = c0 + a;
    while (d <= b) {
        d += b;
        c += a;
    }
    return make_rational(c, d);
}

std::optional<Rational> statement_v_witness(const Rational& x, const RealNumber& alpha) {
    auto side = compare_real(alpha, x);
    if (side == 0) {
        return smallest_larger_tangent_neighbor(x, true);
    }
    Rational y = smallest_larger_tangent_neighbor(x, side > 0);
    if (strictly_between(alpha, x, y)) {
        return y;
    }
    return std::nullopt;
}

bool is_convergent(const Rational& x, const RealNumber& alpha) {
    ContinuedFraction cf = cf_of_real(alpha);
    std::size_t count = cf.is_finite() ? cf.last_index() + 1 : 8;
    for (;;) {
        std::vector<Convergent> convs = convergents(cf, count);
        for (const Convergent& c : convs) {
            if (c.B == x.den() && c.A == x.num()) {
                return true;
            }
        }
        // Denominators increase strictly from index 1 on.
        if (cf.is_finite() || convs.back().B > x.den()) {
            return false;
        }
        count *= 2;
    }
}

bool in_chain(const Rational& x, const RealNumber& alpha) {
    const FordCircle target = ford_circle(x);
    ContinuedFraction cf = cf_of_real(alpha);
    std::size_t count = cf.is_finite() ? cf.last_index() + 1 : 8;
    for (;;) {
        std::vector<ChainEntry> chain = cf_chain(alpha, count);
        for (const ChainEntry& e : chain) {
            if (e.circle == target) {
                return true;
            }
        }
        // Radii strictly decrease from index 1 on.
        if (cf.is_finite() || chain.back().circle.radius < target.radius) {
            return false;
        }
        count *= 2;
    }
}

std::optional<Rational> penultimate_companion(const Rational& alpha) {
    ContinuedFraction cf = cf_of_rational(alpha);
    std::size_t n = cf.last_index();
    if (n == 0) {
        return std::nullopt;
    }
    std::vector<Convergent> convs = convergents(cf, n + 1);
    return make_rational(Integer(convs[n].A - convs[n - 1].A), Integer(convs[n].B - convs[n - 1].B));
}

TheoremUReport theorem_u_check(const Rational& x, const RealNumber& alpha, CandidateMode mode) {
    TheoremUReport r;
    r.x = x;
    r.alpha = alpha.description();
    r.is_integer = x.is_integer();
    r.stmt_i = is_convergent(x, alpha);
    r.stmt_ii = in_chain(x, alpha);
    r.stmt_iii = is_best_approx_2nd(x, alpha, mode);
    r.stmt_iv = is_nearby(x, alpha, mode);
    r.witness = statement_v_witness(x, alpha);
    r.stmt_v = r.witness.has_value();
    if (r.is_integer) {
        r.consistent = r.stmt_i == r.stmt_ii && r.stmt_iii == r.stmt_iv;
    } else {
        r.consistent = r.stmt_i == r.stmt_ii && r.stmt_i == r.stmt_iii &&
                       r.stmt_i == r.stmt_iv && r.stmt_i == r.stmt_v;
    }
    return r;
}

std::vector<Rational> rationals_in(const Rational& lo, const Rational& hi, std::size_t max_den,
                                   bool closed_right) {
    std::vector<Rational> out;
    for (std::size_t den = 1; den <= max_den; ++den) {
        Integer d(static_cast<unsigned long>(den));
        Integer first = ceil(lo * Rational(d));
        Integer last = floor(hi * Rational(d));
        for (Integer c = first; c <= last; ++c) {
            if (!coprime(c, d)) continue;
            Rational v = make_rational(c, d);
            if (!closed_right && v == hi) continue;
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SweepReport verify_sweep(const SweepParams& params) {
    if (params.max_den_x == 0 || params.max_den_alpha == 0 || !(params.lo < params.hi)) {
        throw std::invalid_argument("sweep needs positive denominator caps and lo < hi");
    }
    auto start = std::chrono::steady_clock::now();

    std::vector<Rational> xs;
    for (Rational& x : rationals_in(params.lo - Rational(1), params.hi + Rational(1),
                                    params.max_den_x, false)) {
        if (!x.is_integer() && params.lo - Rational(1) < x) {
            xs.push_back(std::move(x));
        }
    }
    std::vector<Rational> alphas = rationals_in(params.lo, params.hi, params.max_den_alpha, false);

    std::vector<AlphaResult> results(alphas.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < alphas.size(); i = next++) {
            results[i] = sweep_one_alpha(alphas[i], xs, params);
        }
    };
    std::size_t threads = std::max<std::size_t>(1, std::min(params.threads, alphas.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }

    SweepReport report;
    report.params = params;
    report.x_count = xs.size();
    report.alpha_count = alphas.size();
    for (AlphaResult& r : results) {
        report.total_checked += r.checked;
        report.convergent_pairs += r.convergent_pairs;
        report.proposition_d_mismatches += r.proposition_d_mismatches;
        report.convergent_count_mismatches += r.convergent_count_mismatch ? 1 : 0;
        for (TheoremUReport& bad : r.inconsistencies) {
            report.inconsistencies.push_back(std::move(bad));
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace fordcf
