#pragma once

// Deterministic SVG renderings of Ford circles. All geometry is computed in
// exact rationals and only the final pixel coordinates are formatted, at a
// fixed six decimals, so tangencies survive and output is byte-reproducible.

#include "fordcf/real.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fordcf {

struct RenderSpec {
    Rational lo = 0;
    Rational hi = 1;
    std::size_t max_den = 20;
    std::size_t width_px = 800;
    std::vector<Rational> highlight;
    std::optional<Rational> annotate;

    /// Throws std::invalid_argument unless lo < hi, max_den >= 1, width_px >= 64.
    void validate() const;
};

/// One <circle> per reduced a/b in [lo, hi] with b <= max_den, ordered by
/// denominator then numerator.
std::string render_ford_field(const RenderSpec& spec);

/// Muted Ford field plus the first `depth` circles of alpha's chain.
std::string render_chain(const RealNumber& alpha, std::size_t depth, const RenderSpec& spec);

/// C_x, its witness C_y, the open interval (x, y) and a marker at alpha.
/// Throws std::domain_error("statement (v) fails for this pair") without a witness.
std::string render_statement_v(const Rational& x, const RealNumber& alpha,
                               const RenderSpec& spec);

}  // namespace fordcf
