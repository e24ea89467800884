#pragma once

#include "fordcf/real.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fordcf {

/// A_n / B_n, the n-th convergent.
struct Convergent {
    std::size_t index = 0;
    Integer A;
    Integer B;

    Rational value() const { return make_rational(A, B); }
    friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// [b0; b1, b2, ...]. Finite expansions with N >= 1 always end in b_N >= 2;
/// infinite ones are a view onto a coefficient stream.
class ContinuedFraction {
public:
    /// Validates b_i >= 1 and folds a trailing 1 into its predecessor.
    static ContinuedFraction finite(Integer b0, std::vector<Integer> partials);
    static ContinuedFraction infinite(std::shared_ptr<const CFStream> stream);

    bool is_finite() const { return stream_ == nullptr; }
    const Integer& b0() const { return b0_; }
    /// Finite partials b_1..b_N; empty for an integer or a stream.
    const std::vector<Integer>& partials() const { return partials_; }
    /// N for finite expansions.
    std::size_t last_index() const { return partials_.size(); }

    /// b_index, or nullopt past the end of a finite expansion.
    std::optional<Integer> coefficient(std::size_t index) const;

    /// "[b0;b1,b2]" for finite, first `terms` partials then ",...]" for streams.
    std::string to_string(std::size_t terms = 10) const;

private:
    ContinuedFraction(Integer b0, std::vector<Integer> partials,
                      std::shared_ptr<const CFStream> stream)
        : b0_(std::move(b0)), partials_(std::move(partials)), stream_(std::move(stream)) {}

    Integer b0_;
    std::vector<Integer> partials_;
    std::shared_ptr<const CFStream> stream_;
};

/// Euclidean expansion of x.
ContinuedFraction cf_of_rational(const Rational& x);

/// cf_of_rational for exact rationals; a stream view otherwise.
ContinuedFraction cf_of_real(const RealNumber& alpha);

/// The first `count` convergents. Throws std::out_of_range("expansion
/// exhausted") when a finite expansion has fewer than `count` terms.
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count);

/// Value of a finite expansion; std::domain_error("no finite value") otherwise.
Rational value(const ContinuedFraction& cf);

/// Checks the interleaving A0/B0 < A2/B2 < ... < alpha < ... < A3/B3 < A1/B1.
/// The final convergent may equal alpha when alpha is rational.
bool convergent_ordering_check(const std::vector<Convergent>& convs, const RealNumber& alpha);

}  // namespace fordcf
