#pragma once
/// \file propagator.hpp
/// The free Schroedinger group S(t) = exp(i t Delta / 2) in spectral and
/// direct-quadrature form, the vector field |x + it*grad|^s, the
/// pseudo-conformal transform, and the conjugate-Fourier final-data map.

#include "nlslab/grid.hpp"
#include "nlslab/interp.hpp"

namespace nlslab {

/// Solve i u_t + (1/2) Delta u = 0 for time t: multiplier exp(-i k^2 t / 2).
/// Unitary on L2; t = 0 is the identity.
RadialField free_propagate(const RadialField& u, double t);

/// Same propagator acting on coefficients (no transforms).
SpectralCoeffs free_propagate(const SpectralCoeffs& c, double t);

/// Direct oscillatory-quadrature evaluation of S(t) from the convolution
/// kernel (2 pi i t)^(-3/2) exp(i|x-y|^2/(2t)); reduces to a 1D sine sum for
/// radial data. O(M^2) cost; used as an independent oracle for
/// free_propagate. Requires t != 0.
RadialField kernel_propagate(const RadialField& u, double t);

/// |x + it*grad|^s realized as modulate(t) o |t k|^s-multiplier o
/// modulate(-t). Requires t != 0 and s >= 0. For s = 1 the L2 norm of the
/// result equals ||(x + it*grad) u||_L2 (see apply_vector_field for the
/// direct first-order application, which is preferable at small t).
RadialField vector_field_J(const RadialField& u, double t, double s);

/// Pseudo-conformal transform of a snapshot taken at time 1/t into the
/// transformed solution's snapshot at time t:
///   (it)^(-3/2) exp(i r^2/(2t)) conj(f)(r/t),
/// with (it)^(-3/2) on the principal branch. Requires t != 0. Applying the
/// transform at t and then at 1/t returns the original snapshot up to
/// interpolation error (the transform is its own inverse).
ResampleResult pseudo_conformal(const RadialField& u, double t);

/// The final-data map u0 -> inverse Fourier transform of conj(u0), with the
/// symmetric (unitary) radial Fourier normalization
///   (F f)(k) = sqrt(2/pi) (1/k) Integral g(rho) sin(k rho) drho,
/// under which F is an L2 isometry and equals its own inverse on radial
/// data, so the identity (pseudo_conformal o S(t)) f = S(t) (F conj(f))
/// holds with this exact normalization pair. O(M^2) direct quadrature.
RadialField conj_fourier_final_data(const RadialField& u);

}  // namespace nlslab
