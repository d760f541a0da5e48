#include "nlslab/corpus.hpp"

#include <array>
#include <cmath>
#include <random>

#include "nlslab/cutoffs.hpp"
#include "nlslab/dst.hpp"

namespace nlslab {

namespace {
/// Uniform draw in [0,1) with exactly 53 random bits, independent of the
/// standard library's distribution implementations (which may vary).
double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }
}  // namespace

CorpusKind corpus_kind_from_string(const std::string& name) {
  if (name == "gaussian_mix") return CorpusKind::GaussianMix;
  if (name == "shell_bump") return CorpusKind::ShellBump;
  if (name == "random_bandlimited") return CorpusKind::RandomBandlimited;
  throw InputError("corpus: unknown kind '" + name +
                   "' (expected gaussian_mix, shell_bump, or random_bandlimited)");
}

std::string to_string(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::GaussianMix: return "gaussian_mix";
    case CorpusKind::ShellBump: return "shell_bump";
    case CorpusKind::RandomBandlimited: return "random_bandlimited";
  }
  return "?";
}

RadialField corpus(const RadialGrid& grid, std::uint64_t seed, CorpusKind kind, int shell_j) {
  std::mt19937_64 rng(seed);
  switch (kind) {
    case CorpusKind::GaussianMix: {
      std::array<cx, 3> c;
      std::array<double, 3> a;
      for (int i = 0; i < 3; ++i) {
        const double amp = 0.3 + 0.7 * u01(rng);
        const double phase = 2.0 * kPi * u01(rng);
        a[static_cast<std::size_t>(i)] = 0.3 + 1.7 * u01(rng);
        c[static_cast<std::size_t>(i)] = std::polar(amp, phase);
      }
      return sample_function(grid, [&](double r) {
        cx v = 0.0;
        for (int i = 0; i < 3; ++i)
          v += c[static_cast<std::size_t>(i)] *
               std::exp(-a[static_cast<std::size_t>(i)] * r * r);
        return v;
      });
    }
    case CorpusKind::ShellBump: {
      const cx c = std::polar(0.3 + 0.7 * u01(rng), 2.0 * kPi * u01(rng));
      return sample_function(
          grid, [&](double r) { return c * cutoff_weight(CutoffKind::Shell, shell_j, r); });
    }
    case CorpusKind::RandomBandlimited: {
      if (grid.M < 128)
        throw InputError(
            "corpus: random_bandlimited needs M >= 128 to resolve the fixed "
            "coefficient band n in [8, 96]");
      SpectralCoeffs c(grid);
      for (int n = 8; n <= 96; ++n) {
        const double re = 2.0 * u01(rng) - 1.0;
        const double im = 2.0 * u01(rng) - 1.0;
        c.b[static_cast<std::size_t>(n - 1)] = cx(re, im) / static_cast<double>(n);
      }
      return dst_inverse(c);
    }
  }
  throw InputError("corpus: unknown kind");
}

RadialField standard_gaussian(const RadialGrid& grid, double amplitude) {
  return sample_function(
      grid, [amplitude](double r) { return cx(amplitude * std::exp(-0.5 * r * r)); });
}

}  // namespace nlslab
