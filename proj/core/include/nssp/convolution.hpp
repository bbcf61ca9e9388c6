#pragma once

#include "nssp/field.hpp"

namespace nssp {

/// ((u.grad)v, w)_2 evaluated alias-free: all factors are moved to the 2x
/// zero-padded lattice, so the quadrature is exact for the band limits of an
/// n-grid (total product bandwidth 3n/2 < 2n). Independent of the solver's
/// dealiasing rule.
double advective_inner(const SpectralField& u, const SpectralField& v, const SpectralField& w);

/// The exact instantaneous high-frequency energy balance right-hand side,
/// -((u.grad)u_k, u^k)_2, with u_k the sharp lowpass and u^k the highpass.
double nonlinear_tail_flux(const SpectralField& u, double k);

}  // namespace nssp
