#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace nssp {

inline constexpr double kBoxLength = 6.283185307179586476925286766559;  // 2*pi
inline constexpr double kTwoPi = kBoxLength;

/// Periodic box [0,2pi)^dim sampled on n points per axis.
struct GridSpec {
    int dim = 3;     // 2 or 3
    int n = 32;      // points per axis, power of two, >= 8
    double nu = 1.0; // kinematic viscosity

    void validate() const {
        if (dim != 2 && dim != 3)
            throw std::invalid_argument("GridSpec: dim must be 2 or 3");
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("GridSpec: n must be a power of two >= 8");
        if (!(nu > 0.0))
            throw std::invalid_argument("GridSpec: nu must be positive");
    }

    std::size_t points() const {
        std::size_t p = 1;
        for (int d = 0; d < dim; ++d) p *= static_cast<std::size_t>(n);
        return p;
    }

    /// Largest |xi| representable on the lattice (corner mode).
    double max_wavenumber() const { return 0.5 * n * std::sqrt(double(dim)); }

    /// Largest integer |xi|^2 on the lattice.
    int max_q() const { return dim * (n / 2) * (n / 2); }

    bool operator==(const GridSpec& o) const { return dim == o.dim && n == o.n && nu == o.nu; }
};

/// FFT storage index -> signed integer frequency (Nyquist slot maps to +n/2).
inline int index_to_freq(int i, int n) { return i <= n / 2 ? i : i - n; }

/// Signed frequency -> FFT storage index on an n-point axis.
inline int freq_to_index(int f, int n) { return f >= 0 ? f : f + n; }

/// Visits every lattice site once: f(flat_index, xi, q) where xi is the signed
/// wavevector (xi[2]=0 in 2D) and q = |xi|^2.
template <class F>
inline void for_each_mode(const GridSpec& g, F&& f) {
    const int n = g.n;
    const int n2 = g.dim == 3 ? n : 1;
    std::size_t flat = 0;
    std::array<int, 3> xi{0, 0, 0};
    for (int i0 = 0; i0 < n; ++i0) {
        xi[0] = index_to_freq(i0, n);
        for (int i1 = 0; i1 < n; ++i1) {
            xi[1] = index_to_freq(i1, n);
            if (g.dim == 3) {
                const int q01 = xi[0] * xi[0] + xi[1] * xi[1];
                for (int i2 = 0; i2 < n2; ++i2) {
                    xi[2] = index_to_freq(i2, n);
                    f(flat++, xi, q01 + xi[2] * xi[2]);
                }
            } else {
                f(flat++, xi, xi[0] * xi[0] + xi[1] * xi[1]);
            }
        }
    }
}

/// Flat index of a signed wavevector.
inline std::size_t mode_index(const GridSpec& g, const std::array<int, 3>& xi) {
    const int n = g.n;
    std::size_t idx = static_cast<std::size_t>(freq_to_index(xi[0], n));
    idx = idx * n + freq_to_index(xi[1], n);
    if (g.dim == 3) idx = idx * n + freq_to_index(xi[2], n);
    return idx;
}

}  // namespace nssp
