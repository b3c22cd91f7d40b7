#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropic/laurent.hpp"
#include "tropic/sphdual.hpp"

namespace tropic::loglim {

using sphdual::SphericalComplex;

/// Limit set of V(f): exactly the spherical dual of f.
SphericalComplex loglim_principal(const LaurentPolynomial& f, unsigned threads = 1);

struct OuterApproximation
{
    SphericalComplex complex;
    /// Set when every generator was zero (the result is then the full sphere).
    bool all_generators_zero = false;
};

/**
 * Intersection of the spherical duals of the generators. This contains the
 * limit set of the ideal they generate and may be strictly larger; it is
 * exact for a single generator.
 */
OuterApproximation loglim_outer(std::span<const LaurentPolynomial> generators, unsigned threads = 1);

/// Grid for sampling: magnitudes rho = exp(s) with s evenly spaced in
/// [log_rho_min, log_rho_max].
struct SamplingParams
{
    double log_rho_min = -60000.0;
    double log_rho_max = 60000.0;
    int grid = 200;
    int phases = 8;
    std::uint64_t seed = 1;
    double root_tolerance = 1e-10;
};

struct SamplePoint
{
    /// Unit vector along (log|x_1|, log|x_2|).
    std::vector<double> direction;
    /// sqrt(1 + sum log|x_i|^2).
    double radius = 0.0;
    /// log of the magnitude the fixed variable was set to.
    double grid_log_magnitude = 0.0;
    int grid_index = 0;
    /// 0: first variable fixed on the grid, 1: second variable fixed.
    int sweep = 0;
    int phase = 0;
};

struct SkippedSolve
{
    int grid_index = 0;
    int sweep = 0;
    int phase = 0;
};

struct SampleRun
{
    std::vector<SamplePoint> points;
    std::vector<SkippedSolve> skipped;
};

/**
 * Numerical samples of the log-image of V(f) for f in two variables.
 *
 * For every grid magnitude, every random phase and both sweeps, one variable
 * is fixed at rho * e^{i theta} and the other is solved for. Output is
 * ordered by grid index, then sweep, phase and root. Throws
 * std::invalid_argument unless f has two variables and at least two terms.
 */
SampleRun sample_loglim(const LaurentPolynomial& f, const SamplingParams& params);

struct Cluster
{
    std::vector<double> center;
    std::size_t size = 0;
};

/**
 * Greedy clustering by spherical distance of the samples taken at the
 * outermost tenth of the grid magnitudes (largest |log rho|). Each cluster
 * is seeded by its first sample in order of decreasing radius; centers are
 * normalized means. Ranking by grid magnitude rather than by radius keeps
 * branches whose radius grows more slowly.
 */
std::vector<Cluster> accumulation_clusters(std::span<const SamplePoint> points, double threshold = 0.02);

double spherical_distance(std::span<const double> a, std::span<const double> b);

/// Unit vector along a rational direction.
std::vector<double> unit_vector(const sphdual::RationalDirection& d);

/// Distance from a unit direction to the trace of the complex on the sphere.
/// Supports the full sphere and complexes of one-dimensional cells.
double distance_to_complex(const SphericalComplex& c, std::span<const double> direction);

struct ConsistencyReport
{
    std::size_t samples_checked = 0;
    /// Largest distance from a checked sample to the complex.
    double worst_sample_distance = 0.0;
    /// Largest distance from a ray of the complex to its nearest sample.
    double worst_ray_gap = 0.0;
    bool passed = false;
};

/// Compare samples with radius >= min_radius against the complex: each
/// sample must be within `tolerance` of it and each ray must have a sample
/// within `tolerance`.
ConsistencyReport check_consistency(const SphericalComplex& c, std::span<const SamplePoint> points,
                                    double min_radius, double tolerance);

} // namespace tropic::loglim
