#include "nssp/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>

#include "nssp/operators.hpp"
#include "nssp/transform.hpp"

namespace nssp {

namespace {

template <class Pred>
SpectralField masked(const SpectralField& u, Pred&& keep) {
    SpectralField out = u;
    const GridSpec& g = u.grid;
    for (int c = 0; c < g.dim; ++c) {
        auto comp = out.component(c);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>&, int q) {
            if (!keep(q)) comp[flat] = Complex(0.0, 0.0);
        });
    }
    return out;
}

}  // namespace

SpectralField highpass(const SpectralField& u, double k) {
    if (k < 0.0) throw std::invalid_argument("highpass: k must be >= 0");
    if (k == 0.0) return u;
    return masked(u, [k](int q) { return in_tail(q, k); });
}

SpectralField lowpass(const SpectralField& u, double k) {
    if (k < 0.0) throw std::invalid_argument("lowpass: k must be >= 0");
    return masked(u, [k](int q) { return !in_tail(q, k); });
}

SpectralField band(const SpectralField& u, double h, double k) {
    if (!(h >= 0.0 && h < k)) throw std::invalid_argument("band: requires 0 <= h < k");
    return masked(u, [h, k](int q) { return in_band(q, h, k); });
}

void BesovParams::validate() const {
    if (!(sigma >= -1.0 && sigma <= 0.0))
        throw std::invalid_argument("BesovParams: sigma must lie in [-1, 0]");
}

int max_dyadic_block(const GridSpec& g) {
    const double kmax = g.max_wavenumber();
    int j = 1;
    while (std::exp2(j) <= kmax) ++j;  // block j covers [2^{j-1}, 2^j)
    return j;
}

DyadicDecomposition dyadic_decompose(const SpectralField& u) {
    DyadicDecomposition out;
    out.source_grid = u.grid;
    out.tilde_block = lowpass(u, 1.0);
    const int jmax = max_dyadic_block(u.grid);
    for (int j = 1; j <= jmax; ++j) out.blocks.emplace(j, band(u, std::exp2(j - 1), std::exp2(j)));
    return out;
}

BlockLinf block_linf_norms(const SpectralField& u, int oversample) {
    BlockLinf out;
    // The tilde block is the mean mode; its sup is the constant's magnitude
    // scaled by the inverse-transform normalization.
    const GridSpec& g = u.grid;
    double m2 = 0.0;
    for (int c = 0; c < g.dim; ++c) m2 += std::norm(u.at(c, std::size_t{0}));
    out.tilde = std::sqrt(m2) / std::pow(kTwoPi, 0.5 * g.dim);
    const int jmax = max_dyadic_block(g);
    out.blocks.resize(jmax);
    for (int j = 1; j <= jmax; ++j) {
        SpectralField blk = band(u, std::exp2(j - 1), std::exp2(j));
        bool empty = true;
        for (const Complex& z : blk.data)
            if (z != Complex(0.0, 0.0)) {
                empty = false;
                break;
            }
        out.blocks[j - 1] = empty ? 0.0 : linf_norm(blk, oversample);
    }
    return out;
}

double besov_norm(const BlockLinf& bl, const BesovParams& p) {
    p.validate();
    double sup = 0.0;
    for (std::size_t j1 = 0; j1 < bl.blocks.size(); ++j1)
        sup = std::max(sup, std::exp2(p.sigma * double(j1 + 1)) * bl.blocks[j1]);
    if (!p.homogeneous) sup = std::max(sup, bl.tilde);
    return sup;
}

double besov_norm(const SpectralField& u, const BesovParams& p, int oversample) {
    p.validate();
    if (p.homogeneous && p.sigma < 0.0) {
        const GridSpec& g = u.grid;
        for (int c = 0; c < g.dim; ++c)
            if (u.at(c, std::size_t{0}) != Complex(0.0, 0.0))
                throw std::invalid_argument("besov_norm: homogeneous sigma<0 requires zero mean mode");
    }
    return besov_norm(block_linf_norms(u, oversample), p);
}

}  // namespace nssp
