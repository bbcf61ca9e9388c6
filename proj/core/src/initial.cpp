#include "nssp/initial.hpp"

#include <cmath>
#include <stdexcept>

#include "nssp/operators.hpp"
#include "nssp/transform.hpp"

namespace nssp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mode_key(std::uint64_t seed, const std::array<int, 3>& xi, int comp, int salt) {
    std::uint64_t h = splitmix64(seed ^ 0x6e73737000000001ULL);
    auto mix = [&h](std::uint64_t v) { h = splitmix64(h ^ v); };
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(xi[0])));
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(xi[1])));
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(xi[2])));
    mix(static_cast<std::uint64_t>(comp));
    mix(static_cast<std::uint64_t>(salt));
    return h;
}

double uniform01(std::uint64_t h) {
    return (double(h >> 11) + 0.5) * 0x1.0p-53;  // (0,1)
}

/// Standard normal pair via Box-Muller from two hashed uniforms.
Complex gaussian_pair(std::uint64_t seed, const std::array<int, 3>& xi, int comp) {
    const double u1 = uniform01(mode_key(seed, xi, comp, 1));
    const double u2 = uniform01(mode_key(seed, xi, comp, 2));
    const double r = std::sqrt(-2.0 * std::log(u1));
    return Complex(r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2));
}

RealField evaluate_on_lattice(const GridSpec& g, int ncomp_used,
                              double (*f)(int c, double x, double y, double z)) {
    RealField out(g);
    const int n = g.n;
    const double hstep = kTwoPi / double(n);
    for (int c = 0; c < ncomp_used; ++c) {
        auto vals = out.component(c);
        std::size_t flat = 0;
        for (int i0 = 0; i0 < n; ++i0)
            for (int i1 = 0; i1 < n; ++i1) {
                if (g.dim == 3) {
                    for (int i2 = 0; i2 < n; ++i2)
                        vals[flat++] = f(c, i0 * hstep, i1 * hstep, i2 * hstep);
                } else {
                    vals[flat++] = f(c, i0 * hstep, i1 * hstep, 0.0);
                }
            }
    }
    return out;
}

double taylor_green_2d_f(int c, double x, double y, double) {
    return c == 0 ? std::sin(x) * std::cos(y) : -std::cos(x) * std::sin(y);
}

double taylor_green_3d_f(int c, double x, double y, double z) {
    if (c == 0) return std::sin(x) * std::cos(y) * std::cos(z);
    if (c == 1) return -std::cos(x) * std::sin(y) * std::cos(z);
    return 0.0;
}

double abc_f(int c, double x, double y, double z) {
    if (c == 0) return std::sin(z) + std::cos(y);
    if (c == 1) return std::sin(x) + std::cos(z);
    return std::sin(y) + std::cos(x);
}

SpectralField random_divfree(const GridSpec& g, std::uint64_t seed, double slope) {
    SpectralField u(g);
    const int kcut = g.n / 3;
    const double qcut = double(kcut) * double(kcut);
    for (int c = 0; c < g.dim; ++c) {
        auto comp = u.component(c);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& xi, int q) {
            if (q == 0 || double(q) > qcut) return;
            const double amp = std::pow(double(q), 0.25 * slope);  // |xi|^{slope/2}
            comp[flat] = amp * gaussian_pair(seed, xi, c) * (1.0 / std::sqrt(2.0));
        });
    }
    hermitian_symmetrize(u);
    u = leray_project(u);
    const double nrm = l2_norm(u);
    if (nrm > 0.0) u *= 1.0 / nrm;
    return u;
}

}  // namespace

InitialKind parse_initial_kind(const std::string& s) {
    if (s == "taylor_green_2d") return InitialKind::taylor_green_2d;
    if (s == "taylor_green_3d") return InitialKind::taylor_green_3d;
    if (s == "abc") return InitialKind::abc;
    if (s == "random_divfree") return InitialKind::random_divfree;
    throw std::invalid_argument("unknown initial kind: " + s);
}

std::string to_string(InitialKind k) {
    switch (k) {
        case InitialKind::taylor_green_2d: return "taylor_green_2d";
        case InitialKind::taylor_green_3d: return "taylor_green_3d";
        case InitialKind::abc: return "abc";
        case InitialKind::random_divfree: return "random_divfree";
    }
    return "?";
}

SpectralField make_initial(InitialKind kind, const GridSpec& grid, std::uint64_t seed, double spectrum_slope) {
    grid.validate();
    switch (kind) {
        case InitialKind::taylor_green_2d: {
            if (grid.dim != 2) throw std::invalid_argument("taylor_green_2d requires dim=2");
            SpectralField u = to_spectral(evaluate_on_lattice(grid, 2, taylor_green_2d_f));
            return leray_project(u);
        }
        case InitialKind::taylor_green_3d: {
            if (grid.dim != 3) throw std::invalid_argument("taylor_green_3d requires dim=3");
            SpectralField u = to_spectral(evaluate_on_lattice(grid, 2, taylor_green_3d_f));
            return leray_project(u);
        }
        case InitialKind::abc: {
            if (grid.dim != 3) throw std::invalid_argument("abc requires dim=3");
            SpectralField u = to_spectral(evaluate_on_lattice(grid, 3, abc_f));
            return leray_project(u);
        }
        case InitialKind::random_divfree:
            return random_divfree(grid, seed, spectrum_slope);
    }
    throw std::invalid_argument("make_initial: bad kind");
}

}  // namespace nssp
