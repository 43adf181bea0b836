#pragma once

#include "fqsum/enclosure.hpp"

namespace fqsum {

/// Euler-Mascheroni constant from an embedded 120-digit literal. The
/// enclosure width bottoms out near 2*10^-120 regardless of requested
/// precision; that is far below anything the 256-bit pipelines need.
Enclosure euler_gamma(const PrecisionConfig& cfg);

/// exp(gamma), derived from euler_gamma (single source of truth for gamma).
Enclosure exp_gamma(const PrecisionConfig& cfg);

/// Riemann zeta at an integer s >= 2.
Enclosure zeta_int(unsigned s, const PrecisionConfig& cfg);

/// pi as an enclosure (used by tests and the dilogarithm identity checks).
Enclosure const_pi_enc(const PrecisionConfig& cfg);

/// Dilogarithm Li2(x) = sum_{k>=1} x^k / k^2 for an enclosure 0 <= x < 1.
/// The series is truncated with a geometric tail bound added to hi.
Enclosure dilog(const Enclosure& x, const PrecisionConfig& cfg);

}  // namespace fqsum
