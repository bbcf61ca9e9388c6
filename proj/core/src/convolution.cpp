#include "nssp/convolution.hpp"

#include <cmath>
#include <stdexcept>

#include "nssp/littlewood_paley.hpp"
#include "nssp/operators.hpp"
#include "nssp/transform.hpp"

namespace nssp {

double advective_inner(const SpectralField& u, const SpectralField& v, const SpectralField& w) {
    const GridSpec& g = u.grid;
    if (!(v.grid == g) || !(w.grid == g)) throw std::invalid_argument("advective_inner: grid mismatch");

    const RealField pu = to_physical(u, 2);
    const RealField pw = to_physical(w, 2);
    const std::size_t np = pu.grid.points();
    std::vector<double> acc(np, 0.0);
    for (int a = 0; a < g.dim; ++a) {
        const RealField dv = to_physical(derivative(v, a), 2);
        auto ua = pu.component(a);
        for (int c = 0; c < g.dim; ++c) {
            auto dvc = dv.component(c);
            auto wc = pw.component(c);
            for (std::size_t i = 0; i < np; ++i) acc[i] += ua[i] * dvc[i] * wc[i];
        }
    }
    double s = 0.0;
    for (double x : acc) s += x;
    return s * std::pow(kTwoPi / double(pu.grid.n), g.dim);
}

double nonlinear_tail_flux(const SpectralField& u, double k) {
    return -advective_inner(u, lowpass(u, k), highpass(u, k));
}

}  // namespace nssp
