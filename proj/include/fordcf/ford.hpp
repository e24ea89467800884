#pragma once

// Ford circles and horocircles.
//
// A horocircle is determined by its base point on the real axis and its
// radius; the centre sits directly above the base point. Only base points and
// radii are ever needed, so nothing here computes Euclidean centre distances.

#include "fordcf/real.hpp"

#include <compare>
#include <utility>

namespace fordcf {

/// The Ford circle C_{a/b}: tangent to the axis at a/b, radius 1/(2 b^2).
struct FordCircle {
    Rational base;
    Rational radius;

    /// Centre (x, y) in the upper half-plane.
    std::pair<Rational, Rational> center() const { return {base, radius}; }
    friend bool operator==(const FordCircle&, const FordCircle&) = default;
};

FordCircle ford_circle(const Rational& x);

/// A nonnegative radius that is either an exact rational or, when the base
/// point is an irrational stream alpha, the value scale * (p * alpha - q)^2.
class RadiusValue {
public:
    RadiusValue(Rational value);  // NOLINT
    static RadiusValue quadratic(Rational scale, Integer p, Integer q, RealNumber alpha);

    bool is_rational() const { return !alpha_.has_value(); }
    /// Exact value; throws std::logic_error for a stream-based radius.
    const Rational& rational() const;

    const Rational& scale() const { return scale_; }
    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }

    bool is_zero() const;
    std::string description() const;

    /// Exact three-way comparison. Two stream-based radii must share alpha.
    friend std::strong_ordering compare(const RadiusValue& x, const RadiusValue& y);
    friend std::strong_ordering operator<=>(const RadiusValue& x, const RadiusValue& y) {
        return compare(x, y);
    }
    friend bool operator==(const RadiusValue& x, const RadiusValue& y) {
        return compare(x, y) == 0;
    }

private:
    RadiusValue() = default;

    Rational value_;
    Rational scale_;
    Integer p_, q_;
    std::optional<RealNumber> alpha_;
};

struct Horocircle {
    RealNumber base;
    RadiusValue radius;
};

/// |ad - bc| = 1 for x = a/b, y = c/d. Throws std::invalid_argument
/// ("identical circles") when x == y.
bool are_tangent(const Rational& x, const Rational& y);

enum class GapRelation { TangentEquality, StrictlyApart };

/// Sign of |x - y|^2 - 4 r_x r_y for the Ford circles at x and y. A negative
/// gap (overlapping Ford circles) throws std::logic_error.
GapRelation gap_relation(const Rational& x, const Rational& y);

/// Radius 1/2 (b alpha - a)^2 of the horocircle based at alpha tangent to C_{a/b}.
RadiusValue tangent_horocircle_radius(const RealNumber& alpha, const Rational& x);
Horocircle tangent_horocircle(const RealNumber& alpha, const Rational& x);

/// Radius |x - z|^2 / (4 r) of the horocircle based at z tangent to the
/// horocircle with base x and radius r > 0. At most one of the two base points
/// may be an irrational stream unless they are the same stream.
RadiusValue generic_tangent_radius(const RealNumber& base, const Rational& radius,
                                   const RealNumber& z);

/// For tangent x, y and z strictly between them: rad C_z < min(rad C_x, rad C_y).
/// Throws std::invalid_argument("not a between-tangent configuration").
bool lemma_x_check(const Rational& x, const Rational& y, const Rational& z);

/// For tangent x, y with rad C_x > rad C_y, alpha strictly between and z
/// strictly outside [x, y]: the horocircle at alpha tangent to C_x is smaller
/// than the one tangent to C_z. Throws std::invalid_argument("configuration mismatch").
bool lemma_q_check(const Rational& x, const Rational& y, const RealNumber& alpha,
                   const Rational& z);

/// alpha strictly inside the open interval bounded by x and y.
bool strictly_between(const RealNumber& alpha, const Rational& x, const Rational& y);

}  // namespace fordcf
