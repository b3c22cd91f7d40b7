#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tropic/laurent.hpp"

namespace tropic::exactgeom {

using IntRow = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/**
 * A homogeneous system describing a polyhedral cone in R^m:
 * row . xi = 0 for every equality row and row . xi >= 0 for every inequality
 * row.
 *
 * Construction canonicalizes: rows are made primitive, zero rows dropped,
 * an inequality present together with its negation becomes an equality,
 * equality rows get a positive leading entry, and both row lists are sorted
 * and deduplicated. Two systems built from the same rows compare equal.
 */
class LinearSystem
{
  public:
    explicit LinearSystem(std::size_t dim) : dim_(dim) {}
    LinearSystem(std::size_t dim, std::vector<IntRow> equalities, std::vector<IntRow> inequalities);

    static LinearSystem whole_space(std::size_t dim) { return LinearSystem(dim); }

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<IntRow>& equalities() const noexcept { return equalities_; }
    const std::vector<IntRow>& inequalities() const noexcept { return inequalities_; }

    bool satisfied_by(std::span<const std::int64_t> point) const;
    bool satisfied_by(const RationalVector& point) const;

    auto operator<=>(const LinearSystem&) const = default;
    bool operator==(const LinearSystem&) const = default;

  private:
    std::size_t dim_;
    std::vector<IntRow> equalities_;
    std::vector<IntRow> inequalities_;
};

/// Result of analysing the cone of a LinearSystem.
struct ConeAnalysis
{
    /// Linear dimension of the cone; 0 means the cone is the origin.
    int dimension = 0;
    /// Per inequality row: true when the row vanishes on the whole cone.
    std::vector<bool> implicit_equality;
    /// A nonzero relative-interior point, absent for the zero cone.
    std::optional<RationalVector> interior_point;
};

/**
 * Exact feasibility of { x : rows * x >= rhs } with x free, by a Phase I
 * dictionary simplex over the rationals using Bland's rule. Returns a
 * feasible point or nullopt.
 */
std::optional<RationalVector> find_feasible(const RationalMatrix& rows, const RationalVector& rhs,
                                            std::size_t dim);

/// Implicit equalities are found by repeatedly asking whether some row not
/// yet known to be strict can be made strict; one LP per round.
ConeAnalysis analyze_cone(const LinearSystem& system);

int cone_dimension(const LinearSystem& system);
std::optional<RationalVector> interior_point(const LinearSystem& system);

/// Concatenation of both systems, canonicalized.
LinearSystem intersect(const LinearSystem& a, const LinearSystem& b);

/// Same cone, with every implicit equality moved into the equality rows.
LinearSystem promote_implicit_equalities(const LinearSystem& system, const ConeAnalysis& analysis);

/// True when the cone of `inner` lies inside the cone of `outer` (one LP per
/// row of `outer`).
bool cone_contains(const LinearSystem& outer, const LinearSystem& inner);

/// Rank of a rational matrix.
std::size_t rank(RationalMatrix rows, std::size_t dim);

/// Basis of { x : rows * x = 0 }, one vector per column.
RationalMatrix kernel_basis(const RationalMatrix& rows, std::size_t dim);

/// Positive multiple of a nonzero rational vector with coprime integer
/// entries.
IntRow primitive_integer_vector(const RationalVector& v);

/// Divide an integer row by the gcd of its entries (zero rows unchanged).
IntRow make_primitive(IntRow row);

RationalVector to_rational(std::span<const std::int64_t> row);

} // namespace tropic::exactgeom
