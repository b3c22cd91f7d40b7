#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tropic/exactgeom.hpp"
#include "tropic/laurent.hpp"

namespace tropic::sphdual {

using exactgeom::IntRow;
using exactgeom::LinearSystem;

/// A point of S^{m-1} with rational coordinate ratios, stored as a primitive
/// integer vector. xi and -xi are different directions.
class RationalDirection
{
  public:
    /// Throws std::invalid_argument unless `entries` is nonzero with gcd 1.
    explicit RationalDirection(IntRow entries);
    /// Scales any nonzero integer vector down to its primitive multiple.
    static RationalDirection from_vector(IntRow entries);

    const IntRow& entries() const noexcept { return entries_; }
    std::size_t dim() const noexcept { return entries_.size(); }
    RationalDirection operator-() const;

    auto operator<=>(const RationalDirection&) const = default;

  private:
    IntRow entries_;
};

/// A nonzero rational cone of the complex with data cached from its analysis.
struct Cell
{
    LinearSystem system;
    int cone_dimension = 0;
    /// Primitive relative-interior point.
    IntRow interior;

    bool operator==(const Cell& other) const { return system == other.system; }
};

/**
 * Finite union of rational cones, each read as its trace on the unit sphere.
 *
 * The full sphere is a flag rather than a cell. When the complex is the dual
 * of a single polynomial, the defining support is kept so that membership can
 * be answered directly from it.
 */
class SphericalComplex
{
  public:
    static SphericalComplex empty(std::size_t dim);
    static SphericalComplex full_sphere(std::size_t dim);
    /// Reduces `cells` to maximal cells using LP containment.
    static SphericalComplex from_cells(std::size_t dim, std::vector<Cell> cells);

    std::size_t dim() const noexcept { return dim_; }
    bool is_full_sphere() const noexcept { return full_sphere_; }
    bool is_empty() const noexcept { return !full_sphere_ && cells_.empty(); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const std::optional<std::vector<ExponentVector>>& defining_support() const noexcept { return support_; }

    /// Same cells; the defining support is not compared.
    bool operator==(const SphericalComplex& o) const
    {
        return dim_ == o.dim_ && full_sphere_ == o.full_sphere_ && cells_ == o.cells_;
    }

  private:
    friend SphericalComplex spherical_dual(const LaurentPolynomial& f, unsigned threads);

    SphericalComplex(std::size_t dim, bool full) : dim_(dim), full_sphere_(full) {}

    std::size_t dim_;
    bool full_sphere_;
    std::vector<Cell> cells_;
    std::optional<std::vector<ExponentVector>> support_;
};

/**
 * Cone of directions on which alpha0 and alpha1 both maximize the dot product
 * over `points`: (alpha0 - a).xi >= 0 and (alpha1 - a).xi >= 0 for all a.
 * The pair of rows against each other is stored as an equality.
 */
LinearSystem pair_cone(std::span<const ExponentVector> points, const ExponentVector& alpha0,
                       const ExponentVector& alpha1);

/// Analyse a system and return it as a cell, or nullopt for the zero cone.
std::optional<Cell> make_cell(const LinearSystem& system);

/**
 * Spherical dual of the Newton polytope of f.
 *
 * f = 0 gives the full sphere, a single term gives the empty complex.
 * Otherwise all pairs of support points are enumerated; pair cones are
 * evaluated against the hull vertices (an equivalent system) and reduced to
 * maximal cells. `threads` > 1 splits the pair enumeration; the result does
 * not depend on it.
 */
SphericalComplex spherical_dual(const LaurentPolynomial& f, unsigned threads = 1);

/// The maximum of xi.alpha over `points` is attained at least twice.
bool attains_max_twice(std::span<const ExponentVector> points, std::span<const std::int64_t> xi);

/// Membership, answered from the defining support when the complex has one.
bool contains(const SphericalComplex& c, const RationalDirection& xi);
/// Membership by the cells only.
bool cells_contain(const SphericalComplex& c, std::span<const std::int64_t> xi);

SphericalComplex unite(const SphericalComplex& a, const SphericalComplex& b);
SphericalComplex intersect(const SphericalComplex& a, const SphericalComplex& b);

/// All primitive integer vectors of max-norm <= height, lexicographic order.
std::vector<RationalDirection> primitive_directions(std::size_t dim, int height);

/// Primitive directions of max-norm <= height lying in the complex.
std::vector<RationalDirection> rational_points(const SphericalComplex& c, int height);

/// Largest spherical cell dimension (cone dimension - 1); nullopt if empty.
std::optional<int> max_cell_dimension(const SphericalComplex& c);

/// Primitive generators of the one-dimensional cells (both directions for a
/// line). Throws std::domain_error if a cell has higher dimension.
std::vector<RationalDirection> ray_generators(const SphericalComplex& c);

} // namespace tropic::sphdual
