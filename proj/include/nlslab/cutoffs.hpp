#pragma once
/// \file cutoffs.hpp
/// Smooth cutoff profile and the dyadic spatial cutoffs built from it.
///
/// The profile phi is 1 on [0,1], 0 on [2,inf), and a degree-7 smoothstep in
/// between, giving C^3 joins and exact monotonicity. Shell cutoffs are
/// differences of dilated profiles:
///   shell_j(r)       = phi(2^-j r)     - phi(2^-j+1 r)   (support [2^(j-1), 2^(j+1)])
///   ball_j(r)        = phi(2^-j r)
///   wide_shell_j(r)  = phi(2^-j-1 r)   - phi(2^-j+2 r)
///   wider_shell_j(r) = phi(2^-j-2 r)   - phi(2^-j+3 r)
/// so that consecutive shells telescope exactly and
/// shell_j * wide_shell_j = shell_j pointwise (support inclusion).

#include "nlslab/grid.hpp"

namespace nlslab {

/// The base profile phi described above.
double cutoff_profile(double x);

enum class CutoffKind { Shell, Ball, WideShell, WiderShell };

/// Value of the requested dyadic cutoff at radius r.
double cutoff_weight(CutoffKind kind, int j, double r);

/// Pointwise multiplication by the requested cutoff. Warns (never fails)
/// when the grid does not resolve shell 2^j: 2^j < 4*dr or 2^(j+1) > R.
RadialField spatial_cutoff(const RadialField& u, int j, CutoffKind kind,
                           WarningSink sink = nullptr);

/// Multiply by 1 - phi(r/N0): the part of the field living at radii >~ N0.
RadialField scale_cutoff_high(const RadialField& u, double N0);

/// Multiply by phi(r/N0): the complementary low-radius part, so that
/// scale_cutoff_high(u, N0) + scale_cutoff_low(u, N0) == u exactly.
RadialField scale_cutoff_low(const RadialField& u, double N0);

}  // namespace nlslab
