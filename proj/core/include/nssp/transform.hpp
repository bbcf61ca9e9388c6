#pragma once

#include "nssp/field.hpp"

namespace nssp {

/// Inverse transform onto an (oversample*n)^dim collocation lattice.
/// oversample must be 1 or 2; 2 zero-pads the spectrum.
RealField to_physical(const SpectralField& f, int oversample = 1);

/// Forward transform from collocation samples; output is exactly
/// Hermitian-symmetric. Rejects non-finite input.
SpectralField to_spectral(const RealField& v);

/// Low-level per-component complex transforms on a full n^dim cube
/// (unnormalized DFT, FFTW sign convention). Deterministic plans.
namespace fft {
void forward(int dim, int n, Complex* data);   // e^{-i xi.x}
void backward(int dim, int n, Complex* data);  // e^{+i xi.x}
}  // namespace fft

/// Scatters coefficients of f's component c into an m-point-per-axis cube
/// (m >= n), zero elsewhere. Used for zero-padded products.
void scatter_component(const SpectralField& f, int c, int m, Complex* out);

/// Forward transform of one scalar sample array on g's lattice, unitary
/// normalization (no Hermitian symmetrization).
std::vector<Complex> forward_scalar(const GridSpec& g, const std::vector<double>& vals);

}  // namespace nssp
