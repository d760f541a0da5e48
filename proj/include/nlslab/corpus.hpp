#pragma once
/// \file corpus.hpp
/// Deterministic seeded test data. Every family is defined by grid-independent
/// parameters (analytic profiles or coefficients at fixed wavenumber indices),
/// so the same seed produces the same physical function on any grid that
/// resolves it — the property the grid-doubling stability studies rely on.

#include <cstdint>
#include <string>

#include "nlslab/grid.hpp"

namespace nlslab {

enum class CorpusKind {
  GaussianMix,        ///< sum of three complex Gaussians with bounded widths
  ShellBump,          ///< smooth bump supported in the dyadic shell 2^j
  RandomBandlimited,  ///< random sine coefficients at fixed indices n in [8, 96]
};

CorpusKind corpus_kind_from_string(const std::string& name);
std::string to_string(CorpusKind kind);

/// Deterministic field for (seed, kind). Identical inputs give bit-identical
/// samples. `shell_j` is only read by ShellBump.
RadialField corpus(const RadialGrid& grid, std::uint64_t seed, CorpusKind kind, int shell_j = 0);

/// amplitude * exp(-r^2/2), the reference datum of the desk experiments.
RadialField standard_gaussian(const RadialGrid& grid, double amplitude = 1.0);

}  // namespace nlslab
