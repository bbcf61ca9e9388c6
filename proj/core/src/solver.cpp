#include "nssp/solver.hpp"

#include <cmath>

#include "nssp/operators.hpp"
#include "nssp/transform.hpp"

namespace nssp {

void SolverConfig::validate() const {
    grid.validate();
    if (!(dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be positive");
    if (t_end < 0.0) throw std::invalid_argument("SolverConfig: t_end must be >= 0");
    if (sample_every < 1) throw std::invalid_argument("SolverConfig: sample_every must be >= 1");
    if (checkpoint_stride < 1) throw std::invalid_argument("SolverConfig: checkpoint_stride must be >= 1");
    const double kmax = grid.max_wavenumber();
    if (dt * grid.nu * kmax * kmax > 10.0)
        throw std::invalid_argument("SolverConfig: dt*nu*kmax^2 > 10, splitting error unbounded");
    for (std::size_t i = 0; i < k_ladder.size(); ++i) {
        if (k_ladder[i] < 1.0 || (i > 0 && k_ladder[i] <= k_ladder[i - 1]))
            throw std::invalid_argument("SolverConfig: k_ladder must be strictly increasing, all >= 1");
    }
}

void apply_dealias(SpectralField& u, DealiasRule rule) {
    if (rule == DealiasRule::none) return;
    const GridSpec& g = u.grid;
    const int cut = g.n / 3;
    for (int c = 0; c < g.dim; ++c) {
        auto comp = u.component(c);
        for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>& xi, int) {
            if (std::abs(xi[0]) > cut || std::abs(xi[1]) > cut || (g.dim == 3 && std::abs(xi[2]) > cut))
                comp[flat] = Complex(0.0, 0.0);
        });
    }
}

namespace {

SpectralField rotational_form(const SpectralField& u) {
    const GridSpec& g = u.grid;
    const RealField pu = to_physical(u, 1);
    const RealField pw = to_physical(curl(u), 1);
    RealField f(g);
    const std::size_t np = g.points();
    if (g.dim == 3) {
        auto u0 = pu.component(0), u1 = pu.component(1), u2 = pu.component(2);
        auto w0 = pw.component(0), w1 = pw.component(1), w2 = pw.component(2);
        auto f0 = f.component(0), f1 = f.component(1), f2 = f.component(2);
        for (std::size_t i = 0; i < np; ++i) {
            f0[i] = u1[i] * w2[i] - u2[i] * w1[i];
            f1[i] = u2[i] * w0[i] - u0[i] * w2[i];
            f2[i] = u0[i] * w1[i] - u1[i] * w0[i];
        }
    } else {
        auto u0 = pu.component(0), u1 = pu.component(1);
        auto w = pw.component(0);
        auto f0 = f.component(0), f1 = f.component(1);
        for (std::size_t i = 0; i < np; ++i) {
            f0[i] = u1[i] * w[i];
            f1[i] = -u0[i] * w[i];
        }
    }
    return to_spectral(f);
}

SpectralField convective_form(const SpectralField& u) {
    const GridSpec& g = u.grid;
    const RealField pu = to_physical(u, 1);
    RealField f(g);
    const std::size_t np = g.points();
    for (int a = 0; a < g.dim; ++a) {
        const RealField da = to_physical(derivative(u, a), 1);
        auto ua = pu.component(a);
        for (int c = 0; c < g.dim; ++c) {
            auto dac = da.component(c);
            auto fc = f.component(c);
            for (std::size_t i = 0; i < np; ++i) fc[i] -= ua[i] * dac[i];
        }
    }
    return to_spectral(f);
}

}  // namespace

SpectralField nonlinear_term(const SpectralField& u, const SolverConfig& cfg) {
    SpectralField n = cfg.nonlinear_form == NonlinearForm::rotational ? rotational_form(u) : convective_form(u);
    apply_dealias(n, cfg.dealias);
    return leray_project(n);
}

SpectralField step(const SpectralField& u, const SolverConfig& cfg) {
    const GridSpec& g = cfg.grid;
    const double nu = cfg.viscosity_enabled ? g.nu : 0.0;
    const double dt = cfg.dt;

    const SpectralField n1 = nonlinear_term(u, cfg);

    auto cn_update = [&](const SpectralField& nonlin_a, const SpectralField* nonlin_b) {
        SpectralField out(g);
        for (int c = 0; c < g.dim; ++c) {
            auto uc = u.component(c);
            auto ac = nonlin_a.component(c);
            auto oc = out.component(c);
            auto bc = nonlin_b ? nonlin_b->component(c) : std::span<const Complex>{};
            for_each_mode(g, [&](std::size_t flat, const std::array<int, 3>&, int q) {
                const double a = 0.5 * nu * dt * double(q);
                const Complex nl = nonlin_b ? 0.5 * (ac[flat] + bc[flat]) : ac[flat];
                oc[flat] = ((1.0 - a) * uc[flat] + dt * nl) / (1.0 + a);
            });
        }
        out.divergence_free = true;
        return out;
    };

    const SpectralField predictor = cn_update(n1, nullptr);
    const SpectralField n2 = nonlinear_term(predictor, cfg);
    SpectralField out = cn_update(n1, &n2);

    double e = 0.0;
    for (const Complex& z : out.data) e += std::norm(z);
    if (!std::isfinite(e)) throw BlowupSuspected(u, 0.0);
    return out;
}

DiagnosticsRow make_diagnostics_row(const SpectralField& u, double t, double dissipation_integral,
                                    const SolverConfig& cfg) {
    DiagnosticsRow row;
    row.t = t;
    row.shell = ShellSpectrum(u);
    row.energy = 0.5 * row.shell.total_energy();
    row.enstrophy = row.shell.tail_grad(0.0);
    row.dissipation_integral = dissipation_integral;
    row.block_linf = block_linf_norms(u, cfg.oversample);
    row.besov_m1 = besov_norm(row.block_linf, BesovParams{-1.0, false});
    row.truncated_energies.reserve(cfg.k_ladder.size());
    for (double k : cfg.k_ladder) row.truncated_energies.push_back(row.shell.tail_energy(k));
    return row;
}

TrajectoryRecord run(const SpectralField& u0, const SolverConfig& cfg) {
    cfg.validate();
    if (!(u0.grid == cfg.grid)) throw std::invalid_argument("run: initial field grid mismatch");

    TrajectoryRecord rec;
    rec.cfg = cfg;

    SpectralField u = u0;
    apply_dealias(u, cfg.dealias);
    u = leray_project(u);

    const double nu = cfg.viscosity_enabled ? cfg.grid.nu : 0.0;
    const long nsteps = std::llround(cfg.t_end / cfg.dt);
    double dissipation = 0.0;
    double grad2_prev = grad_l2_norm(u);
    grad2_prev *= grad2_prev;

    long sample_count = 0;
    auto sample = [&](const SpectralField& state, double t) {
        rec.times.push_back(t);
        rec.diagnostics.push_back(make_diagnostics_row(state, t, dissipation, cfg));
        if (sample_count % cfg.checkpoint_stride == 0) {
            rec.checkpoint_times.push_back(t);
            rec.checkpoints.push_back(state);
        }
        ++sample_count;
    };

    sample(u, 0.0);
    for (long i = 1; i <= nsteps; ++i) {
        try {
            u = step(u, cfg);
        } catch (const BlowupSuspected& b) {
            rec.aborted = true;
            rec.abort_time = double(i) * cfg.dt;
            return rec;
        }
        double grad2 = grad_l2_norm(u);
        grad2 *= grad2;
        dissipation += 0.5 * cfg.dt * nu * (grad2_prev + grad2);
        grad2_prev = grad2;
        if (i % cfg.sample_every == 0) sample(u, double(i) * cfg.dt);
    }
    return rec;
}

}  // namespace nssp
