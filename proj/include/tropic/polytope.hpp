#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tropic/laurent.hpp"

namespace tropic::polytope {

/**
 * Convex hull of finitely many integer points, stored by its extreme points.
 * The empty polytope (Newton polytope of 0) is a distinct value and is never
 * represented by an empty vertex list meaning "the origin".
 */
class LatticePolytope
{
  public:
    static LatticePolytope empty(std::size_t dim);

    /// Hull of arbitrary points; non-extreme points are filtered out.
    static LatticePolytope hull(std::size_t dim, std::vector<ExponentVector> points);

    std::size_t dim() const noexcept { return dim_; }
    bool is_empty() const noexcept { return empty_; }
    /// Extreme points in lexicographic order.
    const std::vector<ExponentVector>& vertices() const noexcept { return vertices_; }

    bool operator==(const LatticePolytope&) const = default;

  private:
    LatticePolytope(std::size_t dim, bool empty, std::vector<ExponentVector> vertices)
        : dim_(dim), empty_(empty), vertices_(std::move(vertices)) {}

    std::size_t dim_;
    bool empty_;
    std::vector<ExponentVector> vertices_;
};

/// Extreme points of a finite point set (duplicates allowed), sorted.
/// A point is extreme iff some linear functional is strictly larger on it
/// than on every other point; decided by exact LP.
std::vector<ExponentVector> extreme_points(std::vector<ExponentVector> points);

LatticePolytope newton_polytope(const LaurentPolynomial& f);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// Affine dimension, or nullopt for the empty polytope.
std::optional<int> dimension(const LatticePolytope& p);

} // namespace tropic::polytope
