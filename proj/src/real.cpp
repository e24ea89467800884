#include "fordcf/real.hpp"

#include <numeric>

namespace fordcf {

namespace {

class PeriodicCoefficients final : public CoefficientProvider {
public:
    explicit PeriodicCoefficients(PeriodicForm form) : form_(std::move(form)) {}

    Integer at(std::size_t index) const override {
        std::size_t i = index - 1;
        if (i < form_.prefix.size()) {
            return form_.prefix[i];
        }
        return form_.block[(i - form_.prefix.size()) % form_.block.size()];
    }

    const PeriodicForm* periodic() const override { return &form_; }

private:
    PeriodicForm form_;
};

class GeneratedCoefficients final : public CoefficientProvider {
public:
    explicit GeneratedCoefficients(std::function<Integer(std::size_t)> generator)
        : generator_(std::move(generator)) {}

    Integer at(std::size_t index) const override { return generator_(index); }

private:
    std::function<Integer(std::size_t)> generator_;
};

std::pair<Rational, Rational> ordered(Rational x, Rational y) {
    if (y < x) {
        std::swap(x, y);
    }
    return {std::move(x), std::move(y)};
}

int sign_of(std::strong_ordering o) {
    if (o < 0) return -1;
    if (o > 0) return 1;
    return 0;
}

// Sign of p*alpha - q for a stream alpha; p and q not both zero.
int sign_of_linear(const Integer& p, const Integer& q, const RealNumber& alpha,
                   std::size_t max_pulls) {
    if (p == 0) {
        return -sgn(q);
    }
    int side = sign_of(compare_real(alpha, make_rational(q, p), max_pulls));
    return p > 0 ? side : -side;
}

Rational eval_quadratic(const Rational& quad, const Rational& lin, const Rational& cst,
                        const Rational& t) {
    return (quad * t + lin) * t + cst;
}

}  // namespace

CFStream::CFStream(Integer b0, std::shared_ptr<const CoefficientProvider> partials,
                   std::string label)
    : b0_(std::move(b0)), partials_(std::move(partials)), label_(std::move(label)) {
    if (!partials_) {
        throw std::invalid_argument("stream needs a coefficient provider");
    }
}

Integer CFStream::partial(std::size_t index) const {
    Integer b = partials_->at(index);
    if (b < 1) {
        throw std::domain_error("partial quotient b_" + std::to_string(index) +
                                " must be positive, got " + b.get_str());
    }
    return b;
}

bool CFStream::same_value(const CFStream& other) const {
    if (this == &other) {
        return true;
    }
    if (b0_ != other.b0_) {
        return false;
    }
    const PeriodicForm* mine = periodic();
    const PeriodicForm* theirs = other.periodic();
    if (mine == nullptr || theirs == nullptr) {
        return partials_ == other.partials_;
    }
    // Two eventually periodic sequences agree everywhere once they agree on
    // the longer prefix plus one common period.
    std::size_t span = std::max(mine->prefix.size(), theirs->prefix.size()) +
                       std::lcm(mine->block.size(), theirs->block.size());
    for (std::size_t i = 1; i <= span; ++i) {
        if (partials_->at(i) != other.partials_->at(i)) {
            return false;
        }
    }
    return true;
}

RealNumber::RealNumber(std::shared_ptr<const CFStream> stream) : value_(std::move(stream)) {
    if (!std::get<std::shared_ptr<const CFStream>>(value_)) {
        throw std::invalid_argument("null stream");
    }
}

std::string RealNumber::description() const {
    return is_rational() ? to_string(rational()) : stream().label();
}

RealNumber periodic_real(Integer b0, std::vector<Integer> prefix, std::vector<Integer> block,
                         std::string label) {
    if (block.empty()) {
        throw std::invalid_argument("periodic block must be non-empty");
    }
    for (const auto* part : {&prefix, &block}) {
        for (const Integer& b : *part) {
            if (b < 1) {
                throw std::domain_error("partial quotients must be positive");
            }
        }
    }
    auto provider = std::make_shared<PeriodicCoefficients>(
        PeriodicForm{std::move(prefix), std::move(block)});
    return RealNumber(std::make_shared<const CFStream>(std::move(b0), std::move(provider),
                                                       std::move(label)));
}

RealNumber generated_real(Integer b0, std::function<Integer(std::size_t)> generator,
                          std::string label) {
    auto provider = std::make_shared<GeneratedCoefficients>(std::move(generator));
    return RealNumber(std::make_shared<const CFStream>(std::move(b0), std::move(provider),
                                                       std::move(label)));
}

RealNumber sqrt_real(const Integer& n) {
    if (n <= 1 || is_perfect_square(n)) {
        throw std::domain_error("not a quadratic irrational");
    }
    const Integer a0 = isqrt(n);
    Integer m = 0;
    Integer d = 1;
    Integer a = a0;
    std::vector<Integer> block;
    // The period of sqrt(n) always closes with the coefficient 2*a0.
    do {
        m = d * a - m;
        d = (n - m * m) / d;
        a = (a0 + m) / d;
        block.push_back(a);
    } while (a != 2 * a0);
    return periodic_real(a0, {}, std::move(block), "sqrt:" + n.get_str());
}

RealNumber golden_ratio() {
    return periodic_real(1, {}, {Integer(1)}, "golden");
}

BracketWalker::BracketWalker(const CFStream& stream, std::size_t max_pulls)
    : stream_(stream), max_pulls_(max_pulls), a_prev_(1), b_prev_(0), a_(stream.b0()), b_(1) {
    advance();
}

void BracketWalker::advance() {
    if (pulls_ >= max_pulls_) {
        throw BudgetExhausted("coefficient budget exhausted after " + std::to_string(pulls_) +
                              " pulls on " + stream_.label());
    }
    ++pulls_;
    ++index_;
    Integer b = stream_.partial(index_);
    Integer a_next = b * a_ + a_prev_;
    Integer b_next = b * b_ + b_prev_;
    a_prev_ = std::move(a_);
    b_prev_ = std::move(b_);
    a_ = std::move(a_next);
    b_ = std::move(b_next);
}

Rational BracketWalker::current() const {
    return make_rational(a_, b_);
}

Rational BracketWalker::previous() const {
    return make_rational(a_prev_, b_prev_);
}

std::pair<Rational, Rational> BracketWalker::bracket() const {
    return ordered(previous(), current());
}

std::strong_ordering compare_real(const RealNumber& alpha, const Rational& q,
                                  std::size_t max_pulls) {
    if (alpha.is_rational()) {
        return alpha.rational() <=> q;
    }
    BracketWalker walker(alpha.stream(), max_pulls);
    for (;;) {
        auto [lo, hi] = walker.bracket();
        if (q < lo) return std::strong_ordering::greater;
        if (q > hi) return std::strong_ordering::less;
        walker.advance();
    }
}

std::strong_ordering compare_linear_forms(const Integer& d, const Integer& c, const Integer& b,
                                          const Integer& a, const RealNumber& alpha,
                                          std::size_t max_pulls) {
    if (d <= 0 || b <= 0) {
        throw std::invalid_argument("linear form coefficients d and b must be positive");
    }
    if (d == b && c == a) {
        return std::strong_ordering::equal;
    }
    if (alpha.is_rational()) {
        const Rational& x = alpha.rational();
        return abs(Rational(d) * x - Rational(c)) <=> abs(Rational(b) * x - Rational(a));
    }
    // (d t - c)^2 - (b t - a)^2 = ((d - b) t - (c - a)) * ((d + b) t - (c + a)),
    // and neither factor vanishes at an irrational t.
    int left = sign_of_linear(Integer(d - b), Integer(c - a), alpha, max_pulls);
    int right = sign_of_linear(Integer(d + b), Integer(c + a), alpha, max_pulls);
    return left * right < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

int sign_of_quadratic(const Rational& quad, const Rational& lin, const Rational& cst,
                      const RealNumber& alpha, std::size_t max_pulls) {
    if (alpha.is_rational()) {
        return eval_quadratic(quad, lin, cst, alpha.rational()).sign();
    }
    if (quad.sign() == 0 && lin.sign() == 0) {
        return cst.sign();
    }
    std::optional<Rational> vertex;
    if (quad.sign() != 0) {
        vertex = -lin / (Rational(2) * quad);
    }
    BracketWalker walker(alpha.stream(), max_pulls);
    for (;;) {
        auto [lo, hi] = walker.bracket();
        Rational f_lo = eval_quadratic(quad, lin, cst, lo);
        Rational f_hi = eval_quadratic(quad, lin, cst, hi);
        Rational low = std::min(f_lo, f_hi);
        Rational high = std::max(f_lo, f_hi);
        if (vertex && lo < *vertex && *vertex < hi) {
            Rational f_v = eval_quadratic(quad, lin, cst, *vertex);
            low = std::min(low, f_v);
            high = std::max(high, f_v);
        }
        if (low.sign() > 0) return 1;
        if (high.sign() < 0) return -1;
        walker.advance();
    }
}

Integer floor_multiple(const RealNumber& alpha, const Integer& d, std::size_t max_pulls) {
    if (d <= 0) {
        throw std::invalid_argument("floor_multiple needs a positive multiplier");
    }
    if (alpha.is_rational()) {
        return floor(Rational(d) * alpha.rational());
    }
    BracketWalker walker(alpha.stream(), max_pulls);
    for (;;) {
        auto [lo, hi] = walker.bracket();
        Integer k_lo = floor(Rational(d) * lo);
        if (k_lo == floor(Rational(d) * hi)) {
            return k_lo;
        }
        walker.advance();
    }
}

Rational approximate(const RealNumber& alpha, const Rational& tolerance, std::size_t max_pulls) {
    if (tolerance.sign() <= 0) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (alpha.is_rational()) {
        return alpha.rational();
    }
    BracketWalker walker(alpha.stream(), max_pulls);
    for (;;) {
        auto [lo, hi] = walker.bracket();
        if (hi - lo <= tolerance) {
            return walker.current();
        }
        walker.advance();
    }
}

bool same_value(const RealNumber& x, const RealNumber& y) {
    if (x.is_rational() != y.is_rational()) {
        return false;
    }
    if (x.is_rational()) {
        return x.rational() == y.rational();
    }
    return x.stream().same_value(y.stream());
}

}  // namespace fordcf
