#pragma once
/// \file dst.hpp
/// Forward/inverse sine transforms between RadialField and SpectralCoeffs,
/// plus cosine-series evaluation (used for spectral radial derivatives).
///
/// Normalization: with L = M-1 interior values and the type-I DST
///   S[x]_j = 2 * sum_{n=1}^{L} x_n sin(pi j n / M),
/// the forward map is b = S[g] / M and the inverse is g = S[b] / 2. The pair
/// round-trips exactly (S o S = 2M * Id) and satisfies the discrete Parseval
/// identity  4*pi*dr*sum|g|^2 = 2*pi*R*sum|b|^2.
///
/// Transform plans are cached per length behind a mutex and executed on
/// caller-owned buffers, so all entry points here are safe to call from
/// multiple threads concurrently.

#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

/// g -> sine coefficients b. Throws InputError on length mismatch.
SpectralCoeffs dst_forward(const RadialField& u);

/// Sine coefficients b -> g. Throws InputError on length mismatch.
RadialField dst_inverse(const SpectralCoeffs& c);

/// Evaluate the cosine series sum_{n=1}^{M-1} c_n cos(k_n r_m) at every
/// interior node. Given the sine coefficients b of g, passing c_n = k_n b_n
/// yields the exact spectral derivative g'(r_m).
std::vector<cx> cosine_series_eval(const RadialGrid& grid, const std::vector<cx>& c);

}  // namespace nlslab
