#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "nssp/field.hpp"
#include "nssp/littlewood_paley.hpp"
#include "nssp/shell_spectrum.hpp"

namespace nssp {

enum class DealiasRule { two_thirds, none };
enum class NonlinearForm { rotational, convective };

struct SolverConfig {
    GridSpec grid;
    double dt = 1e-3;
    double t_end = 1.0;
    DealiasRule dealias = DealiasRule::two_thirds;
    NonlinearForm nonlinear_form = NonlinearForm::rotational;
    int sample_every = 1;

    // diagnostics sampled into every row
    std::vector<double> k_ladder{1.0, 2.0, 4.0, 8.0};
    int oversample = 2;
    int checkpoint_stride = 1;  // retain a field every this many samples

    bool viscosity_enabled = true;  // test hook for the inviscid proxy

    void validate() const;
};

struct DiagnosticsRow {
    double t = 0.0;
    double energy = 0.0;                // 0.5 ||u||_2^2
    double enstrophy = 0.0;             // ||grad u||_2^2
    double dissipation_integral = 0.0;  // nu * int_0^t ||grad u||_2^2
    double besov_m1 = 0.0;              // ||u||_{B^{-1}_{inf,inf}}, inhomogeneous
    std::vector<double> truncated_energies;  // ||u^k||_2^2 per ladder entry
    BlockLinf block_linf;                    // per-dyadic-block sup norms
    ShellSpectrum shell;                     // spectral mass by integer |xi|^2
};

struct TrajectoryRecord {
    SolverConfig cfg;
    std::vector<double> times;
    std::vector<DiagnosticsRow> diagnostics;
    std::vector<double> checkpoint_times;
    std::vector<SpectralField> checkpoints;
    bool aborted = false;
    double abort_time = 0.0;

    const DiagnosticsRow& row(std::size_t i) const { return diagnostics[i]; }
    std::size_t size() const { return times.size(); }
};

/// Integration diverged (NaN/Inf); carries the last finite state.
struct BlowupSuspected : std::runtime_error {
    SpectralField last_finite;
    double t = 0.0;
    BlowupSuspected(SpectralField u, double time)
        : std::runtime_error("blow-up suspected: non-finite state"), last_finite(std::move(u)), t(time) {}
};

/// Zeroes modes with max_i |xi_i| > floor(n/3) (two-thirds rule); no-op for
/// DealiasRule::none.
void apply_dealias(SpectralField& u, DealiasRule rule);

/// Dealiased, Leray-projected nonlinear term N(u): rotational P[u x curl u]
/// or convective -P[(u.grad)u]; both equal modulo a projected-out gradient.
SpectralField nonlinear_term(const SpectralField& u, const SolverConfig& cfg);

/// One CN-Heun step: Crank-Nicolson viscous solve, Heun (explicit trapezoid)
/// nonlinear update. Second order, self-starting. Throws BlowupSuspected on
/// non-finite state.
SpectralField step(const SpectralField& u, const SolverConfig& cfg);

DiagnosticsRow make_diagnostics_row(const SpectralField& u, double t, double dissipation_integral,
                                    const SolverConfig& cfg);

/// Integrates to t_end (snapped to a whole number of steps), sampling
/// diagnostics every sample_every steps; aborts cleanly on blow-up with the
/// record truncated at the last valid sample.
TrajectoryRecord run(const SpectralField& u0, const SolverConfig& cfg);

}  // namespace nssp
