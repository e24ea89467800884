#pragma once

// Real numbers as exact rationals or as continued-fraction coefficient
// streams, with comparisons that always terminate on a decision.
//
// A stream is always irrational, so every rational q is eventually pushed
// strictly outside the bracket formed by two consecutive convergents. All
// comparisons walk that bracket; there is no floating-point path.

#include "fordcf/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fordcf {

/// Default cap on coefficient pulls for a single comparison.
inline constexpr std::size_t kDefaultMaxPulls = 10'000;

/// Raised when a comparison pulls more coefficients than its budget allows.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An eventually periodic tail: prefix then `block` repeated forever.
struct PeriodicForm {
    std::vector<Integer> prefix;
    std::vector<Integer> block;
};

/// Random-access source of the partial quotients b_1, b_2, ...
/// Implementations must be deterministic: at(i) always returns the same value.
class CoefficientProvider {
public:
    virtual ~CoefficientProvider() = default;
    virtual Integer at(std::size_t index) const = 0;  // index >= 1
    virtual const PeriodicForm* periodic() const { return nullptr; }
};

class CFStream {
public:
    CFStream(Integer b0, std::shared_ptr<const CoefficientProvider> partials, std::string label);

    const Integer& b0() const { return b0_; }
    const std::string& label() const { return label_; }
    const PeriodicForm* periodic() const { return partials_->periodic(); }

    /// b_index for index >= 1; throws std::domain_error on a coefficient < 1.
    Integer partial(std::size_t index) const;

    /// Same number when both are the same object or share b0 and periodic form.
    bool same_value(const CFStream& other) const;

private:
    Integer b0_;
    std::shared_ptr<const CoefficientProvider> partials_;
    std::string label_;
};

class RealNumber {
public:
    RealNumber(Rational value) : value_(std::move(value)) {}  // NOLINT
    RealNumber(long value) : value_(Rational(value)) {}       // NOLINT
    explicit RealNumber(std::shared_ptr<const CFStream> stream);

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    const Rational& rational() const { return std::get<Rational>(value_); }
    const CFStream& stream() const { return *stream_ptr(); }
    const std::shared_ptr<const CFStream>& stream_ptr() const {
        return std::get<std::shared_ptr<const CFStream>>(value_);
    }

    /// "p/q" for rationals, the stream label otherwise.
    std::string description() const;

private:
    std::variant<Rational, std::shared_ptr<const CFStream>> value_;
};

/// Stream [b0; prefix..., block, block, ...]. The block must be non-empty and
/// every coefficient must be >= 1.
RealNumber periodic_real(Integer b0, std::vector<Integer> prefix, std::vector<Integer> block,
                         std::string label);

/// Stream whose partial quotients come from `generator(i)`, i >= 1.
RealNumber generated_real(Integer b0, std::function<Integer(std::size_t)> generator,
                          std::string label);

/// Periodic continued fraction of sqrt(n) via the (m, d, a) surd recurrence.
/// Throws std::domain_error("not a quadratic irrational") for n <= 1 or n square.
RealNumber sqrt_real(const Integer& n);

/// [1; 1, 1, 1, ...]
RealNumber golden_ratio();

/// Convergent recurrence over a stream, tracking the current and previous
/// convergent. Construction pulls b_1, so the bracket is available at once.
class BracketWalker {
public:
    BracketWalker(const CFStream& stream, std::size_t max_pulls = kDefaultMaxPulls);

    /// Index n of the current convergent A_n/B_n (starts at 1).
    std::size_t index() const { return index_; }
    const Integer& A() const { return a_; }
    const Integer& B() const { return b_; }
    const Integer& A_prev() const { return a_prev_; }
    const Integer& B_prev() const { return b_prev_; }

    Rational current() const;
    Rational previous() const;
    /// Endpoints of the open interval between the last two convergents.
    std::pair<Rational, Rational> bracket() const;

    void advance();

private:
    const CFStream& stream_;
    std::size_t max_pulls_;
    std::size_t pulls_ = 0;
    std::size_t index_ = 0;
    Integer a_prev_, b_prev_, a_, b_;
};

/// Exact three-way comparison of alpha against q.
std::strong_ordering compare_real(const RealNumber& alpha, const Rational& q,
                                  std::size_t max_pulls = kDefaultMaxPulls);

/// Compares |d*alpha - c| with |b*alpha - a|. Requires d, b > 0.
/// For a stream alpha the answer is `equal` only when (d, c) == (b, a).
std::strong_ordering compare_linear_forms(const Integer& d, const Integer& c, const Integer& b,
                                          const Integer& a, const RealNumber& alpha,
                                          std::size_t max_pulls = kDefaultMaxPulls);

/// Sign (-1, 0, 1) of quad*alpha^2 + lin*alpha + cst, by evaluating the exact
/// range of the polynomial over shrinking convergent brackets. For a stream
/// alpha that is a root this never decides and raises BudgetExhausted.
int sign_of_quadratic(const Rational& quad, const Rational& lin, const Rational& cst,
                      const RealNumber& alpha, std::size_t max_pulls = kDefaultMaxPulls);

/// floor(d * alpha) for d > 0.
Integer floor_multiple(const RealNumber& alpha, const Integer& d,
                       std::size_t max_pulls = kDefaultMaxPulls);

/// A rational within `tolerance` of alpha (alpha itself when rational).
Rational approximate(const RealNumber& alpha, const Rational& tolerance,
                     std::size_t max_pulls = kDefaultMaxPulls);

/// Same value: equal rationals, or streams that are CFStream::same_value.
bool same_value(const RealNumber& x, const RealNumber& y);

}  // namespace fordcf
