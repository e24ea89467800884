#include "fordcf/ford.hpp"

#include <stdexcept>

namespace fordcf {

namespace {

std::strong_ordering ordering_of_sign(int s) {
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Coefficients of scale * (p t - q)^2 as a polynomial in t.
struct Quadratic {
    Rational quad, lin, cst;
};

Quadratic expand(const RadiusValue& r) {
    if (r.is_rational()) {
        return {Rational(0), Rational(0), r.rational()};
    }
    Rational p(r.p());
    Rational q(r.q());
    return {r.scale() * p * p, Rational(-2) * r.scale() * p * q, r.scale() * q * q};
}

}  // namespace

FordCircle ford_circle(const Rational& x) {
    Integer b2 = x.den() * x.den();
    return {x, make_rational(1, Integer(2 * b2))};
}

RadiusValue::RadiusValue(Rational value) : value_(std::move(value)) {
    if (value_.sign() < 0) {
        throw std::domain_error("radius must be nonnegative");
    }
}

RadiusValue RadiusValue::quadratic(Rational scale, Integer p, Integer q, RealNumber alpha) {
    if (scale.sign() <= 0) {
        throw std::domain_error("radius scale must be positive");
    }
    if (alpha.is_rational()) {
        Rational t = Rational(p) * alpha.rational() - Rational(q);
        return RadiusValue(scale * t * t);
    }
    RadiusValue r;
    r.scale_ = std::move(scale);
    r.p_ = std::move(p);
    r.q_ = std::move(q);
    r.alpha_ = std::move(alpha);
    return r;
}

const Rational& RadiusValue::rational() const {
    if (!is_rational()) {
        throw std::logic_error("radius is not a rational value");
    }
    return value_;
}

bool RadiusValue::is_zero() const {
    // p alpha - q vanishes at an irrational alpha only when p = q = 0.
    return is_rational() ? value_.sign() == 0 : (p_ == 0 && q_ == 0);
}

std::string RadiusValue::description() const {
    if (is_rational()) {
        return to_string(value_);
    }
    return to_string(scale_) + "*(" + p_.get_str() + "*" + alpha_->description() + "-(" +
           q_.get_str() + "))^2";
}

std::strong_ordering compare(const RadiusValue& x, const RadiusValue& y) {
    if (x.is_rational() && y.is_rational()) {
        return x.value_ <=> y.value_;
    }
    const RealNumber& alpha = x.is_rational() ? *y.alpha_ : *x.alpha_;
    if (!x.is_rational() && !y.is_rational() && !same_value(*x.alpha_, *y.alpha_)) {
        throw std::domain_error("radii based at different irrational points");
    }
    Quadratic fx = expand(x);
    Quadratic fy = expand(y);
    return ordering_of_sign(
        sign_of_quadratic(fx.quad - fy.quad, fx.lin - fy.lin, fx.cst - fy.cst, alpha));
}

bool are_tangent(const Rational& x, const Rational& y) {
    if (x == y) {
        throw std::invalid_argument("identical circles");
    }
    Integer det = x.num() * y.den() - x.den() * y.num();
    return abs(det) == 1;
}

GapRelation gap_relation(const Rational& x, const Rational& y) {
    if (x == y) {
        throw std::invalid_argument("identical circles");
    }
    Rational dx = x - y;
    Rational gap = dx * dx - Rational(4) * ford_circle(x).radius * ford_circle(y).radius;
    if (gap.sign() < 0) {
        throw std::logic_error("internal invariant failure: Ford circles at " + to_string(x) +
                               " and " + to_string(y) + " overlap");
    }
    return gap.sign() == 0 ? GapRelation::TangentEquality : GapRelation::StrictlyApart;
}

RadiusValue tangent_horocircle_radius(const RealNumber& alpha, const Rational& x) {
    return RadiusValue::quadratic(make_rational(1, 2), x.den(), x.num(), alpha);
}

Horocircle tangent_horocircle(const RealNumber& alpha, const Rational& x) {
    return {alpha, tangent_horocircle_radius(alpha, x)};
}

RadiusValue generic_tangent_radius(const RealNumber& base, const Rational& radius,
                                   const RealNumber& z) {
    if (radius.sign() <= 0) {
        throw std::domain_error("horocircle radius must be positive");
    }
    if (base.is_rational() && z.is_rational()) {
        Rational dx = base.rational() - z.rational();
        return RadiusValue(dx * dx / (Rational(4) * radius));
    }
    if (!base.is_rational() && !z.is_rational()) {
        if (same_value(base, z)) {
            return RadiusValue(Rational(0));
        }
        throw std::domain_error("both base points irrational");
    }
    // (alpha - m/n)^2 / (4 r) = (n alpha - m)^2 / (4 r n^2)
    const Rational& x = base.is_rational() ? base.rational() : z.rational();
    const RealNumber& alpha = base.is_rational() ? z : base;
    Rational n(x.den());
    Rational scale = (Rational(4) * radius * n * n).reciprocal();
    return RadiusValue::quadratic(std::move(scale), x.den(), x.num(), alpha);
}

bool strictly_between(const RealNumber& alpha, const Rational& x, const Rational& y) {
    const Rational& lo = x < y ? x : y;
    const Rational& hi = x < y ? y : x;
    return compare_real(alpha, lo) > 0 && compare_real(alpha, hi) < 0;
}

bool lemma_x_check(const Rational& x, const Rational& y, const Rational& z) {
    if (x == y || !are_tangent(x, y) || !strictly_between(z, x, y)) {
        throw std::invalid_argument("not a between-tangent configuration");
    }
    Rational rz = ford_circle(z).radius;
    return rz < ford_circle(x).radius && rz < ford_circle(y).radius;
}

bool lemma_q_check(const Rational& x, const Rational& y, const RealNumber& alpha,
                   const Rational& z) {
    if (x == y || !are_tangent(x, y) || !(ford_circle(x).radius > ford_circle(y).radius) ||
        !strictly_between(alpha, x, y)) {
        throw std::invalid_argument("configuration mismatch");
    }
    const Rational& lo = x < y ? x : y;
    const Rational& hi = x < y ? y : x;
    if (lo <= z && z <= hi) {
        throw std::invalid_argument("configuration mismatch");
    }
    return tangent_horocircle_radius(alpha, x) < tangent_horocircle_radius(alpha, z);
}

}  // namespace fordcf
