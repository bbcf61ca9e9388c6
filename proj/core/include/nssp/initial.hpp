#pragma once

#include <cstdint>
#include <string>

#include "nssp/field.hpp"

namespace nssp {

enum class InitialKind { taylor_green_2d, taylor_green_3d, abc, random_divfree };

InitialKind parse_initial_kind(const std::string& s);
std::string to_string(InitialKind k);

/// Canonical initial conditions. All outputs are divergence-free and exactly
/// Hermitian-symmetric. random_divfree draws each mode from a counter-based
/// hash of (seed, xi, component), so the low modes of the same seed coincide
/// across resolutions; the field is band-limited to |xi| <= floor(n/3) and
/// normalized to unit L^2 norm. Closed-form fields keep their textbook
/// amplitude.
SpectralField make_initial(InitialKind kind, const GridSpec& grid, std::uint64_t seed = 0,
                           double spectrum_slope = -2.0);

}  // namespace nssp
