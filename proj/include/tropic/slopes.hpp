#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tropic/sphdual.hpp"

namespace tropic::slopes {

using sphdual::RationalDirection;
using sphdual::SphericalComplex;

/**
 * Projectivised boundary curve coordinate (n1 p1, n1 q1, ..., nh ph, nh qh)
 * in canonical form: gcd 1, and within each pair the first nonzero entry is
 * positive.
 */
class BoundaryCurveCoordinate
{
  public:
    std::size_t num_cusps() const noexcept { return entries_.size() / 2; }
    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

    auto operator<=>(const BoundaryCurveCoordinate&) const = default;

  private:
    friend BoundaryCurveCoordinate canonicalize(std::vector<std::int64_t> v);
    std::vector<std::int64_t> entries_;
};

/// Blockwise (a, b) -> (b, -a). Throws std::invalid_argument unless
/// xi has length 2h.
RationalDirection apply_T(const RationalDirection& xi, std::size_t h);

/// Throws std::invalid_argument for the zero vector or odd length.
BoundaryCurveCoordinate canonicalize(std::vector<std::int64_t> v);

/// Coordinates of all rational points of height <= `height` in C, read in
/// the variable order (m1, l1, ..., mh, lh). Throws std::invalid_argument
/// for odd ambient dimension.
std::set<BoundaryCurveCoordinate> detect_boundary_coordinates(const SphericalComplex& c, int height);

/// "p/q" in lowest terms (q > 0 unless the slope is infinite), or "inf".
/// Throws std::invalid_argument unless h = 1.
std::string slope_of(const BoundaryCurveCoordinate& c);

} // namespace tropic::slopes
