#pragma once

#include <map>
#include <vector>

#include "nssp/field.hpp"

namespace nssp {

/// Sharp cutoffs, matching the conventions used throughout:
///   highpass(u,k) keeps |xi| >= k (closed), lowpass(u,k) = u - highpass(u,k),
///   band(u,h,k) keeps h <= |xi| < k.
/// Thresholds are real; |xi| is the Euclidean norm of the integer wavevector.
/// Mask predicates compare the exact integer |xi|^2 against k*k.
inline bool in_tail(int q, double k) { return double(q) >= k * k; }
inline bool in_band(int q, double h, double k) { return double(q) >= h * h && double(q) < k * k; }

SpectralField highpass(const SpectralField& u, double k);
SpectralField lowpass(const SpectralField& u, double k);
SpectralField band(const SpectralField& u, double h, double k);  // requires 0 <= h < k

struct BesovParams {
    double sigma = -1.0;  // in [-1, 0]
    bool homogeneous = false;
    // q = r = infinity, fixed.

    void validate() const;
};

/// Dyadic blocks: block j keeps 2^{j-1} <= |xi| < 2^j (j >= 1 on the integer
/// lattice); the tilde block keeps |xi| < 1, i.e. exactly the mean mode.
struct DyadicDecomposition {
    std::map<int, SpectralField> blocks;
    SpectralField tilde_block;
    GridSpec source_grid;
};

DyadicDecomposition dyadic_decompose(const SpectralField& u);

/// Index of the highest dyadic block that can be nonempty on the grid.
int max_dyadic_block(const GridSpec& g);

/// L^inf norms of the dyadic blocks, blocks[0] unused slot-free: result[j-1]
/// holds block j for j = 1..max_dyadic_block. Cheapest building brick for
/// every Besov evaluation; one inverse transform per block and component.
struct BlockLinf {
    double tilde = 0.0;           // ||tilde block||_inf (= mean-mode magnitude)
    std::vector<double> blocks;   // ||Delta_j u||_inf, j = 1..
};
BlockLinf block_linf_norms(const SpectralField& u, int oversample = 2);

/// Besov norm from precomputed block norms.
double besov_norm(const BlockLinf& bl, const BesovParams& p);

/// sup_j 2^{sigma j} ||Delta_j u||_inf (homogeneous), or
/// max(||tilde u||_inf, sup_{j>=1} ...) (inhomogeneous).
double besov_norm(const SpectralField& u, const BesovParams& p, int oversample = 2);

}  // namespace nssp
