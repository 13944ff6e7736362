#pragma once

#include <cmath>
#include <stdexcept>

#include "sdfvol/sdf.hpp"

namespace sdfvol {

/// Parameters of the density transform sigma(x) = alpha * Psi_beta(-d(x)).
/// In coupled mode alpha is tied to 1/beta; rescaling a coupled parameter
/// set to a different working beta re-derives alpha, while a decoupled set
/// keeps its alpha.
struct DensityParams {
    double alpha = 10.0;
    double beta = 0.1;
    bool coupled = true;

    static DensityParams coupled_from_beta(double beta) {
        DensityParams p{1.0 / beta, beta, true};
        p.validate();
        return p;
    }
    static DensityParams decoupled(double alpha, double beta) {
        DensityParams p{alpha, beta, false};
        p.validate();
        return p;
    }

    /// Same density family evaluated at a different scale, used by the
    /// sampler when it relaxes beta.
    DensityParams with_scale(double new_beta) const {
        return coupled ? DensityParams{1.0 / new_beta, new_beta, true}
                       : DensityParams{alpha, new_beta, false};
    }

    void validate() const {
        if (!(std::isfinite(alpha) && alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
        if (!(std::isfinite(beta) && beta > 0.0)) throw std::invalid_argument("beta must be > 0");
        if (coupled && std::abs(alpha * beta - 1.0) > 1e-12)
            throw std::invalid_argument("coupled params require alpha * beta == 1 within 1e-12");
    }
};

// exp(x) is exactly 0.0 in double below about -745, so for |s|/beta past
// this threshold the branch value is exact without calling exp at all.
inline constexpr double kExpUnderflow = 760.0;

/// CDF of the zero-mean Laplace distribution with scale beta. Each branch
/// only ever exponentiates a nonpositive argument, so the evaluation is
/// overflow-free for any finite s.
inline double laplace_cdf(double s, double beta) {
    const double u = s / beta;
    if (s <= 0.0) return u < -kExpUnderflow ? 0.0 : 0.5 * std::exp(u);
    return u > kExpUnderflow ? 1.0 : 1.0 - 0.5 * std::exp(-u);
}

/// PDF of the zero-mean Laplace distribution with scale beta.
inline double laplace_pdf(double s, double beta) {
    const double u = std::abs(s) / beta;
    return u > kExpUnderflow ? 0.0 : std::exp(-u) / (2.0 * beta);
}

inline double density_from_distance(double d, const DensityParams& p) {
    return p.alpha * laplace_cdf(-d, p.beta);
}

inline double density_at(const SdfScene& scene, const DensityParams& p, const Vec3& x) {
    return density_from_distance(scene.eval(x), p);
}

}  // namespace sdfvol
