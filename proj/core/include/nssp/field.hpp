#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nssp/grid.hpp"

namespace nssp {

using Complex = std::complex<double>;

/// Vector field as complex Fourier coefficients on the integer wavevector
/// lattice, component-major. The transform convention is unitary on
/// L^2([0,2pi)^dim): ||u||_2^2 = sum_xi |u_hat(xi)|^2.
struct SpectralField {
    GridSpec grid;
    std::vector<Complex> data;  // dim * n^dim entries
    bool divergence_free = false;

    SpectralField() = default;
    explicit SpectralField(const GridSpec& g) : grid(g), data(g.points() * g.dim) {}

    static SpectralField zeros(const GridSpec& g) { return SpectralField(g); }

    std::span<Complex> component(int c) {
        return {data.data() + static_cast<std::size_t>(c) * grid.points(), grid.points()};
    }
    std::span<const Complex> component(int c) const {
        return {data.data() + static_cast<std::size_t>(c) * grid.points(), grid.points()};
    }

    Complex& at(int c, std::size_t flat) { return data[static_cast<std::size_t>(c) * grid.points() + flat]; }
    const Complex& at(int c, std::size_t flat) const {
        return data[static_cast<std::size_t>(c) * grid.points() + flat];
    }

    Complex& at(int c, const std::array<int, 3>& xi) { return at(c, mode_index(grid, xi)); }
    const Complex& at(int c, const std::array<int, 3>& xi) const { return at(c, mode_index(grid, xi)); }
};

/// Collocation samples of a real vector field, component-major, row-major
/// lattice order. The grid records the sampling resolution (so an oversampled
/// field simply carries a finer grid).
struct RealField {
    GridSpec grid;
    std::vector<double> values;  // dim * n^dim entries

    RealField() = default;
    explicit RealField(const GridSpec& g) : grid(g), values(g.points() * g.dim, 0.0) {}

    std::span<double> component(int c) {
        return {values.data() + static_cast<std::size_t>(c) * grid.points(), grid.points()};
    }
    std::span<const double> component(int c) const {
        return {values.data() + static_cast<std::size_t>(c) * grid.points(), grid.points()};
    }
};

/// Enforces coeff(-xi) == conj(coeff(xi)) exactly (bitwise), averaging the
/// stored pair. Self-conjugate modes (xi == -xi mod n) lose their imaginary
/// part. Keeping symmetry exact makes physical fields exactly real and the
/// half-spectrum checkpoint round trip bitwise.
void hermitian_symmetrize(SpectralField& f);

/// Largest relative Hermitian-symmetry violation, max_xi |c(-xi) - conj(c(xi))| / scale.
double hermitian_asymmetry(const SpectralField& f);

/// Largest relative divergence residual, max_xi |xi . u_hat(xi)| / |u_hat(xi)|.
double divergence_residual(const SpectralField& f);

inline SpectralField& operator+=(SpectralField& a, const SpectralField& b) {
    for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
    return a;
}
inline SpectralField& operator-=(SpectralField& a, const SpectralField& b) {
    for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] -= b.data[i];
    return a;
}
inline SpectralField& operator*=(SpectralField& a, double s) {
    for (auto& z : a.data) z *= s;
    return a;
}

}  // namespace nssp
