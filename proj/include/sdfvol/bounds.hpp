#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sdfvol/density.hpp"
#include "sdfvol/sdf.hpp"
#include "sdfvol/vec3.hpp"

namespace sdfvol {

/// A camera ray x(t) = origin + t * dir, t in [0, far]. By convention
/// far = 2 * bounding_radius unless overridden.
struct Ray {
    Vec3 origin;
    Vec3 dir;
    double far = 1.0;

    Ray(const Vec3& origin_, const Vec3& dir_, double far_);
    static Ray through(const Vec3& origin, const Vec3& target, double far);

    Vec3 at(double t) const { return origin + dir * t; }
};

/// Sorted knots along one ray with the geometry caches (signed distances
/// and per-interval d*) that do not depend on the density scale. Built
/// per-ray, owned by one worker; read-only afterwards.
struct SampleTrack {
    Ray ray;
    std::vector<double> t;       // knots, strictly increasing, t.front()=0, t.back()=far
    std::vector<double> d;       // signed distance at each knot
    std::vector<double> d_star;  // per-interval lower distance bound, size n-1

    static SampleTrack build(const SdfScene& scene, const Ray& ray, std::vector<double> knots);
    static SampleTrack uniform(const SdfScene& scene, const Ray& ray, int n);
    /// Assemble from precomputed distances (tests, synthetic tracks).
    static SampleTrack from_values(const Ray& ray, std::vector<double> knots, std::vector<double> dists);

    std::size_t knot_count() const { return t.size(); }
    std::size_t interval_count() const { return t.size() - 1; }

    /// Merge new (position, distance) pairs, keeping existing caches;
    /// d* is recomputed (cheap arithmetic, no SDF evaluations).
    void insert(std::span<const double> new_t, std::span<const double> new_d);

    void recompute_d_star();
};

/// Everything about one (track, params) pair: densities, rectangle-rule
/// prefix sums, cumulative error terms, and the per-interval / global
/// opacity error bounds.
struct BoundTable {
    double alpha = 0.0, beta = 0.0;
    std::vector<double> sigma;            // at knots
    std::vector<double> r_hat;            // R_hat(t_k), r_hat[0] = 0
    std::vector<double> e_hat;            // E_hat(t_{k+1}), size n-1, cumulative
    std::vector<double> interval_bounds;  // size n-1
    double global = 0.0;

    static BoundTable build(const SampleTrack& track, const DensityParams& params);
};

/// Lower bound on the distance from a ray segment of length `delta` to the
/// complement of the two endpoint balls of radii |d_i|, |d_next|.
/// Three cases: disjoint balls -> 0; obtuse configuration -> min radius;
/// otherwise the triangle height via Heron's formula. A negative radicand
/// from cancellation clamps to 0.
double d_star(double d_i, double d_next, double delta);

/// Theorem-1 rate: (alpha / 2 beta) * exp(-d*/beta) dominates |d sigma/ds|
/// on the segment.
double lipschitz_bound(double d_i, double d_next, double delta, const DensityParams& params);

/// Left-Riemann optical depth R_hat(t); piecewise linear, nondecreasing.
/// t outside [0, far] is rejected. Ties t == t_k belong to interval k.
double rectangle_sum(const SampleTrack& track, const DensityParams& params, double t);
double rectangle_sum(const SampleTrack& track, const BoundTable& table, double t);

/// O_hat(t) = 1 - exp(-R_hat(t)).
double opacity_hat(const SampleTrack& track, const DensityParams& params, double t);
double opacity_hat(const SampleTrack& track, const BoundTable& table, double t);

/// E_hat(t): cumulative rectangle-rule error bound, nondecreasing, 0 at 0.
double error_hat(const SampleTrack& track, const DensityParams& params, double t);

/// exp(-R_hat(t_k)) * (exp(E_hat(t_{k+1})) - 1) for 0-based interval k;
/// bounds max |O - O_hat| over that interval.
double interval_bound(const SampleTrack& track, const DensityParams& params, std::size_t k);

/// B_{T,beta}: max of interval_bound over all intervals.
double global_bound(const SampleTrack& track, const DensityParams& params);

/// Thrown when the opacity oracle cannot certify itself at the requested
/// resolution; the caller must raise the resolution.
struct OracleResolutionError : std::runtime_error {
    double gap;
    std::size_t resolution;
    OracleResolutionError(double gap_, std::size_t resolution_);
};

struct OracleResult {
    std::vector<double> values;  // O(t) at the requested points
    std::size_t resolution;      // accepted resolution
    double richardson_gap;       // max change when doubling
};

inline constexpr std::size_t kOracleMinResolution = std::size_t{1} << 14;
inline constexpr std::size_t kOracleDefaultResolution = std::size_t{1} << 16;
inline constexpr double kOracleRichardsonTol = 1e-8;

/// Ground-truth opacity O(t) at the given (sorted) parameters, by composite
/// trapezoid quadrature of the density on `resolution` uniform intervals
/// over [0, far]. Self-check: recomputed at double resolution; if any value
/// moves by >= 1e-8 the oracle throws OracleResolutionError. Independent of
/// the rectangle-rule machinery under test.
OracleResult opacity_oracle(const SdfScene& scene, const DensityParams& params, const Ray& ray,
                            std::span<const double> ts, std::size_t resolution);

/// opacity_oracle with dyadic escalation up to max_resolution.
OracleResult opacity_oracle_escalating(const SdfScene& scene, const DensityParams& params,
                                       const Ray& ray, std::span<const double> ts,
                                       std::size_t resolution, std::size_t max_resolution);

}  // namespace sdfvol
