#include "nssp/shell_spectrum.hpp"

#include <cmath>

namespace nssp {

ShellSpectrum::ShellSpectrum(const SpectralField& u) {
    const GridSpec& g = u.grid;
    dim_ = g.dim;
    mass_.assign(static_cast<std::size_t>(g.max_q()) + 1, 0.0);
    for (int c = 0; c < g.dim; ++c) {
        auto comp = u.component(c);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>&, int q) {
            mass_[static_cast<std::size_t>(q)] += std::norm(comp[flat]);
        });
    }
    prefix_.assign(mass_.size() + 1, 0.0);
    prefix_grad_.assign(mass_.size() + 1, 0.0);
    for (std::size_t q = 0; q < mass_.size(); ++q) {
        prefix_[q + 1] = prefix_[q] + mass_[q];
        prefix_grad_[q + 1] = prefix_grad_[q] + double(q) * mass_[q];
    }
}

int ShellSpectrum::q_floor_of_threshold(double k) const {
    if (k <= 0.0) return 0;
    const double kk = k * k;
    if (kk > double(max_q())) return max_q() + 1;
    // smallest integer q with q >= k*k
    int q = int(std::ceil(kk));
    while (q > 0 && double(q - 1) >= kk) --q;  // guard against ceil rounding at exact squares
    while (double(q) < kk) ++q;
    return q;
}

double ShellSpectrum::range_mass(int qlo, int qhi) const {
    qlo = std::max(qlo, 0);
    qhi = std::min(qhi, max_q() + 1);
    if (qlo >= qhi) return 0.0;
    return prefix_[static_cast<std::size_t>(qhi)] - prefix_[static_cast<std::size_t>(qlo)];
}

double ShellSpectrum::range_grad(int qlo, int qhi) const {
    qlo = std::max(qlo, 0);
    qhi = std::min(qhi, max_q() + 1);
    if (qlo >= qhi) return 0.0;
    return prefix_grad_[static_cast<std::size_t>(qhi)] - prefix_grad_[static_cast<std::size_t>(qlo)];
}

double ShellSpectrum::tail_energy(double k) const { return range_mass(q_floor_of_threshold(k), max_q() + 1); }

double ShellSpectrum::tail_grad(double k) const { return range_grad(q_floor_of_threshold(k), max_q() + 1); }

double ShellSpectrum::band_energy(double h, double k) const {
    return range_mass(q_floor_of_threshold(h), q_floor_of_threshold(k));
}

double ShellSpectrum::band_grad(double h, double k) const {
    return range_grad(q_floor_of_threshold(h), q_floor_of_threshold(k));
}

double ShellSpectrum::tail_sobolev(double k, double s) const {
    double acc = 0.0;
    for (int q = q_floor_of_threshold(k); q <= max_q(); ++q)
        if (mass_[q] != 0.0 && q > 0) acc += std::pow(double(q), s) * mass_[q];
    return acc;
}

double ShellSpectrum::sobolev_mass(double s) const {
    double acc = 0.0;
    for (int q = 0; q <= max_q(); ++q)
        if (mass_[q] != 0.0) acc += std::pow(1.0 + double(q), s) * mass_[q];
    return acc;
}

}  // namespace nssp
