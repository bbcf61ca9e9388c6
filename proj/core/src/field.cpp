#include "nssp/field.hpp"

#include <algorithm>
#include <cmath>

namespace nssp {

void hermitian_symmetrize(SpectralField& f) {
    const GridSpec& g = f.grid;
    const int n = g.n;
    for (int c = 0; c < g.dim; ++c) {
        auto comp = f.component(c);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& xi, int) {
            std::array<int, 3> mxi{-xi[0], -xi[1], -xi[2]};
            // Nyquist +n/2 is its own mirror slot.
            for (int d = 0; d < 3; ++d)
                if (mxi[d] == -n / 2) mxi[d] = n / 2;
            const std::size_t mflat = mode_index(g, mxi);
            if (mflat < flat) return;  // each pair handled once
            const Complex a = comp[flat];
            const Complex b = comp[mflat];
            const Complex avg = 0.5 * (a + std::conj(b));
            if (mflat == flat) {
                comp[flat] = Complex(avg.real(), 0.0);
            } else {
                comp[flat] = avg;
                comp[mflat] = std::conj(avg);
            }
        });
    }
}

double hermitian_asymmetry(const SpectralField& f) {
    const GridSpec& g = f.grid;
    const int n = g.n;
    double worst = 0.0;
    double scale = 0.0;
    for (int c = 0; c < g.dim; ++c) {
        auto comp = f.component(c);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& xi, int) {
            std::array<int, 3> mxi{-xi[0], -xi[1], -xi[2]};
            for (int d = 0; d < 3; ++d)
                if (mxi[d] == -n / 2) mxi[d] = n / 2;
            const Complex diff = comp[mode_index(g, mxi)] - std::conj(comp[flat]);
            worst = std::max(worst, std::abs(diff));
            scale = std::max(scale, std::abs(comp[flat]));
        });
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

double divergence_residual(const SpectralField& f) {
    const GridSpec& g = f.grid;
    double worst = 0.0;
    for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& xi, int q) {
        if (q == 0) return;
        Complex div = 0.0;
        double mag2 = 0.0;
        for (int c = 0; c < g.dim; ++c) {
            const Complex z = f.at(c, flat);
            div += double(xi[c]) * z;
            mag2 += std::norm(z);
        }
        if (mag2 > 0.0) worst = std::max(worst, std::abs(div) / std::sqrt(mag2));
    });
    return worst;
}

}  // namespace nssp
