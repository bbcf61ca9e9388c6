#pragma once

#include <vector>

#include "nssp/field.hpp"

namespace nssp {

/// Spectral mass grouped by the exact integer q = |xi|^2. Every rotationally
/// symmetric quadratic functional of a field (truncated energies, band
/// energies, Sobolev norms, shell-superposition sums) reduces to a weighted
/// sum over this histogram; boundary conventions stay exact because q is an
/// integer compared against squared real thresholds.
class ShellSpectrum {
  public:
    ShellSpectrum() = default;
    explicit ShellSpectrum(const SpectralField& u);

    int dim() const { return dim_; }
    int max_q() const { return int(mass_.size()) - 1; }
    const std::vector<double>& mass() const { return mass_; }

    /// ||u^k||_2^2 = sum over |xi| >= k.
    double tail_energy(double k) const;
    /// ||grad u^k||_2^2.
    double tail_grad(double k) const;
    /// ||u_{h,k}||_2^2 over h <= |xi| < k.
    double band_energy(double h, double k) const;
    double band_grad(double h, double k) const;

    double total_energy() const { return tail_energy(0.0); }

    /// Homogeneous Sobolev mass sum |xi|^{2s} |u_hat|^2 over |xi| >= k.
    double tail_sobolev(double k, double s) const;
    /// Inhomogeneous Sobolev mass sum (1+|xi|^2)^s |u_hat|^2 (whole field).
    double sobolev_mass(double s) const;

  private:
    int dim_ = 0;
    std::vector<double> mass_;         // index q
    std::vector<double> prefix_;       // prefix_[q] = sum_{p<q} mass_[p]
    std::vector<double> prefix_grad_;  // sum_{p<q} p*mass_[p]

    // half-open [qlo, qhi) sums via prefixes
    double range_mass(int qlo, int qhi) const;
    double range_grad(int qlo, int qhi) const;
    int q_floor_of_threshold(double k) const;  // smallest q with q >= k*k, clamped
};

}  // namespace nssp
