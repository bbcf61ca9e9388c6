#pragma once

#include <vector>

#include "nssp/check_report.hpp"
#include "nssp/field.hpp"
#include "nssp/shell_spectrum.hpp"
#include "nssp/solver.hpp"

namespace nssp {

/// j^s by repeated multiplication; exact while the result stays within the
/// double integer range, and consistently huge beyond it (only thresholds
/// past the grid's band limit land there, where every mask is empty anyway).
double int_pow(double base, int exp);

/// |(u_k, u^l)_2| vanishes for 0 < k <= l; tolerance 1e-12 * ||u||_2^2.
CheckReport check_orthogonality(const SpectralField& u, double k, double l);

/// k^alpha ||u^k||_2^2 <= ||u^k||_{H^alpha homog}^2 within 1e-10 relative.
CheckReport check_bernstein(const SpectralField& u, double k, double alpha);

/// The spectrum of the product u_k u_l (all component pairs, computed on the
/// 2x zero-padded lattice) vanishes outside |xi| <= k+l, to 1e-12 of the
/// product norm. Rejects k or l beyond the padded per-axis Nyquist n.
CheckReport check_product_support(const SpectralField& u, double k, double l);

/// Ratio ||u_k||_inf / (k^{-sigma} ||u_k||_{B^sigma}) for sigma in [-1,0),
/// k >= 1; the fitted constant is its ensemble/trajectory max.
CheckReport check_linf_bound(const SpectralField& u, double k, double sigma);

/// Ratio ||u_{k,l}||_B / ||u^k||_B at sigma=-1; reported, not asserted
/// (exactly <= 1 when l falls on a dyadic boundary).
CheckReport check_band_tail(const SpectralField& u, double k, double l);

/// sum_{j>=k} ||u^j||^2 == sum_{j>=k} j ||u_{j,j+1}||^2 - (k-1) ||u^k||^2,
/// exact on the lattice; 1e-10 relative.
CheckReport superposition_identity(const SpectralField& u, int k);
CheckReport superposition_identity(const ShellSpectrum& s, int k);

/// Bracketing sum_{j>=k} j ||u_{j,j+1}||^2 <= ||u^k||_{H^{1/2} homog}^2 <=
/// sum (j+1) ||u_{j,j+1}||^2; margin carries the ratio (in [1,2] for k>=1).
CheckReport hhalf_equivalence(const SpectralField& u, int k);
CheckReport hhalf_equivalence(const ShellSpectrum& s, int k);

/// Polynomial-ladder analogue with cutoffs j^s, for energy and gradient
/// masses simultaneously; 1e-10 relative.
CheckReport poly_superposition_identity(const SpectralField& u, int l, int s);
CheckReport poly_superposition_identity(const ShellSpectrum& sp, int l, int s);

/// j^i/i <= sum_{p=1}^j p^{i-1} <= (j+1)^i/i in exact integer arithmetic;
/// i, j <= 50 (rejected beyond the supported exact range).
CheckReport power_sum_bounds(int i, int j);

/// The double sum sum_{l>=l1} sum_{j>=l} (j-l+1) l^{i-1} b_j equals its
/// single-sum rearrangement exactly, and sits between the closed-form
/// power-sum brackets; requires i <= 2s-1.
CheckReport weighted_rearrangement(const SpectralField& u, int l1, int i, int s);
CheckReport weighted_rearrangement(const ShellSpectrum& sp, double max_wavenumber, int l1, int i, int s);

/// |(N(u), u)_2| <= 1e-10 ||u||_2 ||N(u)||_2 with N the dealiased projected
/// nonlinear term.
CheckReport nonlinear_cancellation(const SpectralField& u, const SolverConfig& cfg);

/// |((u.grad)u^k, u^k)_2| <= 1e-10 scaled, alias-free padded products.
CheckReport partial_cancellation(const SpectralField& u, double k);

}  // namespace nssp
