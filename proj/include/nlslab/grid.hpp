#pragma once
/// \file grid.hpp
/// Uniform radial grid and the two field representations (physical samples
/// and sine-series coefficients) used throughout the library.
///
/// A spherically symmetric function f on R^3 is stored through the
/// substitution g(r) = r * f(r), which turns the 3D radial Laplacian into a
/// plain second derivative: (Delta f)(r) = g''(r) / r. With the Dirichlet
/// conditions g(0) = g(R) = 0 the natural basis is sin(k_n r), k_n = n*pi/R,
/// which diagonalizes -Delta with eigenvalues k_n^2.

#include <cmath>
#include <functional>
#include <vector>

#include "nlslab/common.hpp"

namespace nlslab {

/// Uniform radial grid on (0, R): interior nodes r_m = m * dr, m = 1..M-1,
/// with dr = R/M. The boundary nodes r = 0 and r = R are not stored; fields
/// vanish there by construction.
struct RadialGrid {
  double R = 0.0;     ///< truncation radius
  std::size_t M = 0;  ///< number of subintervals; M-1 interior nodes

  RadialGrid() = default;
  RadialGrid(double radius, std::size_t subintervals) : R(radius), M(subintervals) {
    if (!(R > 0.0)) throw InputError("RadialGrid: R must be positive");
    if (!is_power_of_two(M) || M < 64)
      throw InputError("RadialGrid: M must be a power of two, M >= 64");
  }

  std::size_t nodes() const { return M - 1; }
  double dr() const { return R / static_cast<double>(M); }
  /// Interior node radius, i = 0..M-2 maps to r = (i+1)*dr.
  double r(std::size_t i) const { return static_cast<double>(i + 1) * dr(); }
  /// Sine wavenumber, i = 0..M-2 maps to k = (i+1)*pi/R.
  double k(std::size_t i) const { return static_cast<double>(i + 1) * kPi / R; }
  double kmax() const { return k(M - 2); }

  bool operator==(const RadialGrid&) const = default;
};

/// Physical-space radial field, stored as g_m = r_m * f(r_m) at the interior
/// nodes. All norms and operators act on this representation.
struct RadialField {
  RadialGrid grid;
  std::vector<cx> g;

  RadialField() = default;
  explicit RadialField(const RadialGrid& gr) : grid(gr), g(gr.nodes(), cx(0.0)) {}
  std::size_t size() const { return g.size(); }
  /// Point value f(r_i) = g_i / r_i.
  cx f(std::size_t i) const { return g[i] / grid.r(i); }
};

/// Frequency-space representation: coefficients b_n of g against sin(k_n r).
struct SpectralCoeffs {
  RadialGrid grid;
  std::vector<cx> b;

  SpectralCoeffs() = default;
  explicit SpectralCoeffs(const RadialGrid& gr) : grid(gr), b(gr.nodes(), cx(0.0)) {}
  std::size_t size() const { return b.size(); }
};

/// Sample a scalar map r -> f(r) onto the grid as g_m = r_m * f(r_m).
/// Throws InputError naming the node if any sample is non-finite.
RadialField sample_function(const RadialGrid& grid, const std::function<cx(double)>& f);

/// |g_{M-1}| / max_m |g_m|: how much of the field survives at the outermost
/// node. Large values mean the domain truncation is biting.
double boundary_leakage(const RadialField& u);

/// Emit a warning through `sink` when boundary_leakage(u) exceeds tol.
void check_decay(const RadialField& u, double tol, WarningSink sink);

}  // namespace nlslab
