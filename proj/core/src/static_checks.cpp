#include "nssp/static_checks.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nssp/convolution.hpp"
#include "nssp/littlewood_paley.hpp"
#include "nssp/operators.hpp"
#include "nssp/transform.hpp"

namespace nssp {

namespace {
constexpr double kIdentityTol = 1e-10;

double sq(double x) { return x * x; }
}  // namespace

double int_pow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

CheckReport check_orthogonality(const SpectralField& u, double k, double l) {
    if (!(k > 0.0 && k <= l)) throw std::invalid_argument("check_orthogonality: requires 0 < k <= l");
    const double lhs = std::abs(inner_product(lowpass(u, k), highpass(u, l)));
    const double e = sq(l2_norm(u));
    CheckReport r;
    r.name = "orthogonality";
    r.lhs = lhs;
    r.rhs = 0.0;
    r.tolerance = 1e-12 * e;
    r.margin = lhs;
    r.k = k;
    r.status = lhs <= r.tolerance ? CheckStatus::identity_pass : CheckStatus::identity_fail;
    return r;
}

CheckReport check_bernstein(const SpectralField& u, double k, double alpha) {
    if (!(k > 0.0) || !(alpha > 0.0)) throw std::invalid_argument("check_bernstein: requires k, alpha > 0");
    const ShellSpectrum s(u);
    const double lhs = std::pow(k, alpha) * s.tail_energy(k);
    const double rhs = s.tail_sobolev(k, 0.5 * alpha);  // |xi|^{2*(alpha/2)} = |xi|^alpha
    CheckReport r;
    r.name = "bernstein";
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = 1e-10;
    r.margin = rhs - lhs;
    r.k = k;
    r.status = lhs <= rhs * (1.0 + 1e-10) ? CheckStatus::inequality_pass : CheckStatus::inequality_fail;
    return r;
}

CheckReport check_product_support(const SpectralField& u, double k, double l) {
    const GridSpec& g = u.grid;
    if (!(k > 0.0 && l > 0.0)) throw std::invalid_argument("check_product_support: requires k, l > 0");
    if (k > double(g.n) || l > double(g.n))
        throw std::invalid_argument("check_product_support: band limit exceeds padded Nyquist");
    const RealField pv = to_physical(lowpass(u, k), 2);
    const RealField pw = to_physical(lowpass(u, l), 2);
    const GridSpec& pg = pv.grid;
    const std::size_t np = pg.points();

    double out_max = 0.0;
    double norm2 = 0.0;
    const double lim2 = sq(k + l);
    std::vector<double> prod(np);
    for (int a = 0; a < g.dim; ++a) {
        auto va = pv.component(a);
        for (int b = 0; b < g.dim; ++b) {
            auto wb = pw.component(b);
            for (std::size_t i = 0; i < np; ++i) prod[i] = va[i] * wb[i];
            const std::vector<Complex> spec = forward_scalar(pg, prod);
            for_each_mode(pg, [&](std::size_t flat, const std::array<int, 3>&, int q) {
                const double m = std::abs(spec[flat]);
                norm2 += m * m;
                if (double(q) > lim2 && m > out_max) out_max = m;
            });
        }
    }
    CheckReport r;
    r.name = "product_support";
    r.lhs = out_max;
    r.rhs = 0.0;
    r.tolerance = 1e-12 * std::sqrt(norm2);
    r.margin = out_max;
    r.k = k;
    r.status = out_max <= r.tolerance ? CheckStatus::identity_pass : CheckStatus::identity_fail;
    return r;
}

CheckReport check_linf_bound(const SpectralField& u, double k, double sigma) {
    if (!(k >= 1.0)) throw std::invalid_argument("check_linf_bound: requires k >= 1");
    if (!(sigma >= -1.0 && sigma < 0.0))
        throw std::invalid_argument("check_linf_bound: requires sigma in [-1, 0)");
    const SpectralField uk = lowpass(u, k);
    const double lhs = linf_norm(uk, 2);
    const double besov = besov_norm(uk, BesovParams{sigma, false}, 2);
    const double rhs = std::pow(k, -sigma) * besov;
    CheckReport r = ratio_report("lowpass_linf_besov", lhs, rhs, rhs > 0.0 ? lhs / rhs : 0.0);
    r.k = k;
    r.sigma = sigma;
    return r;
}

CheckReport check_band_tail(const SpectralField& u, double k, double l) {
    if (!(k > 0.0 && k < l)) throw std::invalid_argument("check_band_tail: requires 0 < k < l");
    const GridSpec& g = u.grid;
    for (int c = 0; c < g.dim; ++c)
        if (u.at(c, std::size_t{0}) != Complex(0.0, 0.0))
            throw std::invalid_argument("check_band_tail: requires spectrum in |xi| >= 1");
    const BesovParams p{-1.0, false};
    const double num = besov_norm(band(u, k, l), p, 2);
    const double den = besov_norm(highpass(u, k), p, 2);
    CheckReport r = ratio_report("band_tail_besov", num, den, den > 0.0 ? num / den : 0.0);
    r.k = k;
    return r;
}

CheckReport superposition_identity(const SpectralField& u, int k) { return superposition_identity(ShellSpectrum(u), k); }

CheckReport superposition_identity(const ShellSpectrum& s, int k) {
    if (k < 1) throw std::invalid_argument("superposition_identity: requires k in N");
    const int jmax = int(std::floor(std::sqrt(double(s.max_q())))) + 1;
    double lhs = 0.0, weighted = 0.0;
    for (int j = k; j <= jmax; ++j) {
        lhs += s.tail_energy(double(j));
        weighted += double(j) * s.band_energy(double(j), double(j + 1));
    }
    const double rhs = weighted - double(k - 1) * s.tail_energy(double(k));
    CheckReport r = identity_report("shell_superposition", lhs, rhs, kIdentityTol);
    r.k = double(k);
    return r;
}

CheckReport hhalf_equivalence(const SpectralField& u, int k) { return hhalf_equivalence(ShellSpectrum(u), k); }

CheckReport hhalf_equivalence(const ShellSpectrum& s, int k) {
    if (k < 1) throw std::invalid_argument("hhalf_equivalence: requires k in N");
    const int jmax = int(std::floor(std::sqrt(double(s.max_q())))) + 1;
    double lo = 0.0, hi = 0.0;
    for (int j = k; j <= jmax; ++j) {
        const double b = s.band_energy(double(j), double(j + 1));
        lo += double(j) * b;
        hi += double(j + 1) * b;
    }
    const double h = s.tail_sobolev(double(k), 0.5);
    const double scale = std::max({lo, hi, h, 1e-300});
    const bool ok = lo <= h + kIdentityTol * scale && h <= hi + kIdentityTol * scale;
    CheckReport r = ratio_report("half_sobolev_bracket", lo, hi, lo > 0.0 ? h / lo : 1.0);
    r.k = double(k);
    if (!ok) r.status = CheckStatus::inequality_fail;
    std::ostringstream ctx;
    ctx << "lower=" << lo << " hhalf=" << h << " upper=" << hi;
    r.context = ctx.str();
    return r;
}

CheckReport poly_superposition_identity(const SpectralField& u, int l, int s) {
    return poly_superposition_identity(ShellSpectrum(u), l, s);
}

CheckReport poly_superposition_identity(const ShellSpectrum& sp, int l, int s) {
    if (l < 1 || s < 1) throw std::invalid_argument("poly_superposition_identity: requires l, s in N");
    const double maxq = double(sp.max_q());
    double lhs_e = 0.0, rhs_e = 0.0, lhs_g = 0.0, rhs_g = 0.0;
    for (int j = l;; ++j) {
        const double t = int_pow(double(j), s);
        if (t * t > maxq) break;
        const double t1 = int_pow(double(j + 1), s);
        lhs_e += sp.tail_energy(t);
        lhs_g += sp.tail_grad(t);
        rhs_e += double(j - l + 1) * sp.band_energy(t, t1);
        rhs_g += double(j - l + 1) * sp.band_grad(t, t1);
    }
    CheckReport r = identity_report("poly_shell_superposition", lhs_e, rhs_e, kIdentityTol);
    const CheckReport rg = identity_report("poly_shell_superposition_grad", lhs_g, rhs_g, kIdentityTol);
    if (!rg.passed()) r.status = CheckStatus::identity_fail;
    std::ostringstream ctx;
    ctx << "grad_lhs=" << lhs_g << " grad_rhs=" << rhs_g << " l=" << l << " s=" << s;
    r.context = ctx.str();
    r.k = double(l);
    return r;
}

CheckReport power_sum_bounds(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("power_sum_bounds: requires i, j in N");
    if (i > 50 || j > 50) throw std::invalid_argument("power_sum_bounds: beyond supported exact range (<= 50)");
    using boost::multiprecision::cpp_int;
    auto ipow = [](cpp_int b, int e) {
        cpp_int r = 1;
        for (int t = 0; t < e; ++t) r *= b;
        return r;
    };
    cpp_int sum = 0;
    for (int p = 1; p <= j; ++p) sum += ipow(p, i - 1);
    const cpp_int lower = ipow(j, i);            // j^i <= i * sum
    const cpp_int upper = ipow(j + 1, i);        // i * sum <= (j+1)^i
    const bool ok = lower <= i * sum && i * sum <= upper;
    CheckReport r;
    r.name = "power_sum_bracket";
    r.lhs = lower.convert_to<double>() / double(i);
    r.rhs = upper.convert_to<double>() / double(i);
    r.margin = sum.convert_to<double>();
    r.tolerance = 0.0;
    r.status = ok ? CheckStatus::inequality_pass : CheckStatus::inequality_fail;
    std::ostringstream ctx;
    ctx << "i=" << i << " j=" << j << " sum=" << sum;
    r.context = ctx.str();
    return r;
}

CheckReport weighted_rearrangement(const SpectralField& u, int l1, int i, int s) {
    return weighted_rearrangement(ShellSpectrum(u), u.grid.max_wavenumber(), l1, i, s);
}

CheckReport weighted_rearrangement(const ShellSpectrum& sp, double max_wavenumber, int l1, int i, int s) {
    if (l1 < 1 || i < 1 || s < 1) throw std::invalid_argument("weighted_rearrangement: requires l1, i, s in N");
    if (i > 2 * s - 1) throw std::invalid_argument("weighted_rearrangement: requires i <= 2s-1");

    int jmax = l1;
    while (int_pow(double(jmax), s) <= max_wavenumber) ++jmax;
    std::vector<double> b(static_cast<std::size_t>(jmax) + 2, 0.0);
    for (int j = 1; j <= jmax; ++j)
        b[j] = sp.band_energy(int_pow(double(j), s), int_pow(double(j + 1), s));

    // brute-force double sum
    double dsum = 0.0;
    for (int l = l1; l <= jmax; ++l) {
        const double wl = int_pow(double(l), i - 1);
        for (int j = l; j <= jmax; ++j) dsum += double(j - l + 1) * wl * b[j];
    }

    // single-sum rearrangement via partial power sums
    double rsum = 0.0, s_im1 = 0.0, s_i = 0.0;
    double lower = 0.0, upper = 0.0;
    for (int j = l1; j <= jmax; ++j) {
        s_im1 += int_pow(double(j), i - 1);
        s_i += int_pow(double(j), i);
        rsum += (s_im1 * double(j + 1) - s_i) * b[j];
        const double ji = int_pow(double(j), i);
        const double jp1 = int_pow(double(j + 1), i + 1);
        const double l1i = int_pow(double(l1), i);
        const double l1m = int_pow(double(l1 - 1), i + 1);
        lower += ((ji - l1i) / double(i) * double(j + 1) - (jp1 - l1m) / double(i + 1)) * b[j];
        upper += ((jp1 - l1m) / double(i) - (int_pow(double(j), i + 1) - int_pow(double(l1), i + 1)) / double(i + 1)) * b[j];
    }

    CheckReport r = identity_report("weighted_rearrangement", dsum, rsum, kIdentityTol);
    const double scale = std::max({std::abs(dsum), std::abs(lower), std::abs(upper), 1e-300});
    const bool brackets = lower <= dsum + kIdentityTol * scale && dsum <= upper + kIdentityTol * scale;
    if (!brackets) r.status = CheckStatus::inequality_fail;
    std::ostringstream ctx;
    ctx << "lower=" << lower << " upper=" << upper << " l1=" << l1 << " i=" << i << " s=" << s;
    r.context = ctx.str();
    return r;
}

CheckReport nonlinear_cancellation(const SpectralField& u, const SolverConfig& cfg) {
    const SpectralField n = nonlinear_term(u, cfg);
    const double ip = std::abs(inner_product(n, u));
    const double scale = l2_norm(u) * l2_norm(n);
    CheckReport r;
    r.name = "nonlinear_cancellation";
    r.lhs = ip;
    r.rhs = 0.0;
    r.tolerance = 1e-10 * scale;
    r.margin = ip;
    r.status = ip <= std::max(r.tolerance, 1e-300) ? CheckStatus::identity_pass : CheckStatus::identity_fail;
    return r;
}

CheckReport partial_cancellation(const SpectralField& u, double k) {
    const SpectralField uk = highpass(u, k);
    const double ip = std::abs(advective_inner(u, uk, uk));
    const double scale = l2_norm(u) * grad_l2_norm(uk) * l2_norm(uk);
    CheckReport r;
    r.name = "partial_cancellation";
    r.lhs = ip;
    r.rhs = 0.0;
    r.tolerance = 1e-10 * std::max(scale, 1.0);
    r.margin = ip;
    r.k = k;
    r.status = ip <= r.tolerance ? CheckStatus::identity_pass : CheckStatus::identity_fail;
    return r;
}

}  // namespace nssp
