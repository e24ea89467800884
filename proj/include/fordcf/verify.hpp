#pragma once

// Executable form of the equivalence between convergents, continued-fraction
// chain members, best approximations of the second kind, nearby Ford circles
// and tangent witnesses.

#include "fordcf/continued_fraction.hpp"
#include "fordcf/ford.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fordcf {

struct ChainEntry {
    std::size_t index = 0;
    Convergent convergent;
    FordCircle circle;
};

/// Ford circles of the first `count` convergents of alpha.
std::vector<ChainEntry> cf_chain(const RealNumber& alpha, std::size_t count);

/// How the best-approximation and nearby oracles pick candidate numerators.
///
/// Pruned: for each denominator d only floor(d alpha) and floor(d alpha) + 1.
/// Any violation at distance |d alpha - c| >= 1 is already matched by the
/// d = 1 candidate floor(alpha) (or alpha sits on an integer), and every
/// violation below distance 1 is one of those two numerators, so nothing is
/// lost. Exhaustive scans a wide box of numerators and validates the pruning.
enum class CandidateMode { Pruned, Exhaustive };

/// |b alpha - a| < |d alpha - c| for every reduced c/d != a/b with d <= b.
bool is_best_approx_2nd(const Rational& x, const RealNumber& alpha,
                        CandidateMode mode = CandidateMode::Pruned);

/// Every Ford circle C_z != C_x with rad C_z >= rad C_x has a strictly larger
/// tangent horocircle at alpha than C_x does. Computed through horocircle radii.
bool is_nearby(const Rational& x, const RealNumber& alpha,
               CandidateMode mode = CandidateMode::Pruned);

/// Tangent neighbour of x = a/b on one side with the smallest denominator
/// exceeding b. That denominator lies in (b, 2b].
Rational smallest_larger_tangent_neighbor(const Rational& x, bool right_side);

/// A Ford circle C_y tangent to C_x, smaller than C_x, with alpha == x or alpha
/// strictly between x and y. Deterministic: the widest such interval on
/// alpha's side (the right side when alpha == x); nullopt when none exists.
std::optional<Rational> statement_v_witness(const Rational& x, const RealNumber& alpha);

/// x appears among the convergents of alpha.
bool is_convergent(const Rational& x, const RealNumber& alpha);

/// C_x appears in the continued fraction chain of alpha.
bool in_chain(const Rational& x, const RealNumber& alpha);

/// For alpha = A_N/B_N with N >= 1, the rational (A_N - A_{N-1})/(B_N - B_{N-1})
/// tangent to the penultimate convergent with alpha strictly in between.
/// nullopt for integers.
std::optional<Rational> penultimate_companion(const Rational& alpha);

struct TheoremUReport {
    Rational x;
    std::string alpha;
    bool is_integer = false;
    bool stmt_i = false;
    bool stmt_ii = false;
    bool stmt_iii = false;
    bool stmt_iv = false;
    bool stmt_v = false;
    std::optional<Rational> witness;
    bool consistent = false;
};

/// Evaluates all five statements independently. For non-integer x the report
/// is consistent when they all agree; for integer x only (i) = (ii) and
/// (iii) = (iv) are required.
TheoremUReport theorem_u_check(const Rational& x, const RealNumber& alpha,
                               CandidateMode mode = CandidateMode::Pruned);

struct SweepParams {
    std::size_t max_den_x = 1;
    std::size_t max_den_alpha = 1;
    Rational lo = 0;
    Rational hi = 1;
    CandidateMode mode = CandidateMode::Pruned;
    std::size_t threads = 1;
};

struct SweepReport {
    SweepParams params;
    std::size_t x_count = 0;
    std::size_t alpha_count = 0;
    std::size_t total_checked = 0;
    std::size_t convergent_pairs = 0;
    std::size_t proposition_d_mismatches = 0;
    std::size_t convergent_count_mismatches = 0;
    std::vector<TheoremUReport> inconsistencies;
    double elapsed_seconds = 0.0;
};

/// Reduced fractions p/q with q <= max_den and lo <= p/q < hi (or <= hi when
/// `closed_right`), ordered by value.
std::vector<Rational> rationals_in(const Rational& lo, const Rational& hi, std::size_t max_den,
                                   bool closed_right);

/// theorem_u_check over every non-integer x with den <= max_den_x in
/// (lo - 1, hi + 1) against every alpha with den <= max_den_alpha in [lo, hi).
/// The report does not depend on the thread count.
SweepReport verify_sweep(const SweepParams& params);

}  // namespace fordcf
