#pragma once
/// \file field_ops.hpp
/// Pointwise and spectral building blocks: Fourier multipliers, quadratic
/// phase modulation, spectral radial derivatives, and the first-order vector
/// field (x + it*grad) applied directly in physical space.

#include <functional>

#include "nlslab/dst.hpp"
#include "nlslab/grid.hpp"

namespace nlslab {

/// Multiply coefficients by m(k_n). Throws InputError if m produces a
/// non-finite value at any wavenumber.
SpectralCoeffs apply_multiplier(const SpectralCoeffs& c, const std::function<cx(double)>& m);

/// Convenience: forward transform, multiply, inverse transform.
RadialField apply_multiplier(const RadialField& u, const std::function<cx(double)>& m);

/// Pointwise multiplication by exp(sign * i r^2 / (2t)). Requires t != 0.
RadialField modulate(const RadialField& u, double t, int sign);

/// The radial derivative f'(r) of the represented function, returned as a
/// field with samples r * f'(r). Uses the exact cosine-series evaluation of
/// g' followed by f' = (g' - g/r) / r.
RadialField radial_derivative(const RadialField& u);

/// Apply (x + it*grad) exactly: output samples r*g + it*(g' - g/r), with g'
/// evaluated spectrally. Unlike the modulated realization of |x + it*grad|^s
/// this stays accurate for arbitrarily small t, because it never forms the
/// rapidly oscillating intermediate exp(-i r^2/(2t)) * u.
RadialField apply_vector_field(const RadialField& u, double t);

/// Elementwise helpers (grids must match).
RadialField add(const RadialField& a, const RadialField& b);
RadialField subtract(const RadialField& a, const RadialField& b);
RadialField scale(const RadialField& a, cx factor);

}  // namespace nlslab
