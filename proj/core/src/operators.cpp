#include "nssp/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "nssp/transform.hpp"

namespace nssp {

SpectralField leray_project(const SpectralField& f) {
    const GridSpec& g = f.grid;
    SpectralField out = f;
    for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& xi, int q) {
        if (q == 0) return;
        Complex dot = 0.0;
        for (int c = 0; c < g.dim; ++c) dot += double(xi[c]) * out.at(c, flat);
        dot /= double(q);
        for (int c = 0; c < g.dim; ++c) out.at(c, flat) -= double(xi[c]) * dot;
    });
    out.divergence_free = true;
    return out;
}

SpectralField derivative(const SpectralField& f, int axis) {
    const GridSpec& g = f.grid;
    SpectralField out = f;
    const Complex iu(0.0, 1.0);
    for (int c = 0; c < g.dim; ++c) {
        auto comp = out.component(c);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& xi, int) {
            comp[flat] *= iu * double(xi[axis]);
        });
    }
    out.divergence_free = false;
    return out;
}

SpectralField curl(const SpectralField& f) {
    const GridSpec& g = f.grid;
    SpectralField out(g);
    const Complex iu(0.0, 1.0);
    if (g.dim == 3) {
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& xi, int) {
            const Complex u0 = f.at(0, flat), u1 = f.at(1, flat), u2 = f.at(2, flat);
            out.at(0, flat) = iu * (double(xi[1]) * u2 - double(xi[2]) * u1);
            out.at(1, flat) = iu * (double(xi[2]) * u0 - double(xi[0]) * u2);
            out.at(2, flat) = iu * (double(xi[0]) * u1 - double(xi[1]) * u0);
        });
    } else {
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& xi, int) {
            out.at(0, flat) = iu * (double(xi[0]) * f.at(1, flat) - double(xi[1]) * f.at(0, flat));
        });
    }
    return out;
}

double l2_norm(const SpectralField& f) {
    double s = 0.0;
    for (const Complex& z : f.data) s += std::norm(z);
    return std::sqrt(s);
}

double grad_l2_norm(const SpectralField& f) {
    const GridSpec& g = f.grid;
    double s = 0.0;
    for (int c = 0; c < g.dim; ++c) {
        auto comp = f.component(c);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>&, int q) {
            s += double(q) * std::norm(comp[flat]);
        });
    }
    return std::sqrt(s);
}

double sobolev_norm(const SpectralField& f, double s, bool homogeneous) {
    const GridSpec& g = f.grid;
    if (homogeneous && s < 0.0) {
        for (int c = 0; c < g.dim; ++c)
            if (f.at(c, std::size_t{0}) != Complex(0.0, 0.0))
                throw std::invalid_argument("sobolev_norm: homogeneous s<0 requires zero mean mode");
    }
    double acc = 0.0;
    for (int c = 0; c < g.dim; ++c) {
        auto comp = f.component(c);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>&, int q) {
            const double m = std::norm(comp[flat]);
            if (m == 0.0) return;
            const double w = homogeneous ? (q == 0 ? 0.0 : std::pow(double(q), s)) : std::pow(1.0 + double(q), s);
            acc += w * m;
        });
    }
    return std::sqrt(acc);
}

double linf_norm(const RealField& v) {
    const GridSpec& g = v.grid;
    double best = 0.0;
    const std::size_t np = g.points();
    for (std::size_t i = 0; i < np; ++i) {
        double m2 = 0.0;
        for (int c = 0; c < g.dim; ++c) {
            const double x = v.values[static_cast<std::size_t>(c) * np + i];
            m2 += x * x;
        }
        if (m2 > best) best = m2;
    }
    return std::sqrt(best);
}

double linf_norm(const SpectralField& f, int oversample) { return linf_norm(to_physical(f, oversample)); }

double inner_product(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("inner_product: grid mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        s += a.data[i].real() * b.data[i].real() + a.data[i].imag() * b.data[i].imag();
    return s;
}

double mean_square_integral(const RealField& v) {
    const GridSpec& g = v.grid;
    double s = 0.0;
    for (double x : v.values) s += x * x;
    return s * std::pow(kTwoPi / double(g.n), g.dim);
}

}  // namespace nssp
