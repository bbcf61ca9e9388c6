#pragma once

#include "nssp/field.hpp"

namespace nssp {

/// Applies the spectral multiplier I - xi xi^T/|xi|^2 modewise; the xi=0 mode
/// is left unchanged. Output is flagged divergence-free.
SpectralField leray_project(const SpectralField& f);

/// Componentwise derivative d/dx_axis (multiplier i*xi_axis).
SpectralField derivative(const SpectralField& f, int axis);

/// Curl. In 3D returns the 3-component vorticity inside a SpectralField; in
/// 2D the scalar vorticity is returned in component 0 (other component zero).
SpectralField curl(const SpectralField& f);

double l2_norm(const SpectralField& f);
double grad_l2_norm(const SpectralField& f);

/// Sobolev norm: homogeneous sqrt(sum |xi|^{2s} |u_hat|^2), inhomogeneous
/// sqrt(sum (1+|xi|^2)^s |u_hat|^2). Homogeneous with s < 0 requires a zero
/// mean mode.
double sobolev_norm(const SpectralField& f, double s, bool homogeneous);

/// Max over the (oversampled) collocation lattice of the pointwise Euclidean
/// magnitude across components.
double linf_norm(const SpectralField& f, int oversample = 2);
double linf_norm(const RealField& v);

/// L^2 inner product sum_c Re(sum_xi u_hat conj(v_hat)).
double inner_product(const SpectralField& a, const SpectralField& b);

/// Mean-square integral (2pi/n)^dim * sum_x |v(x)|^2 of collocation samples.
double mean_square_integral(const RealField& v);

}  // namespace nssp
