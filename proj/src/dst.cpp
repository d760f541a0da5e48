#include "nlslab/dst.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace nlslab {

namespace {

// Plan cache. FFTW planning is not thread safe, so creation is serialized;
// execution via fftw_execute_r2r on distinct caller buffers is safe. Plans
// are created with FFTW_ESTIMATE (deterministic plan choice, no measurement
// noise) and FFTW_UNALIGNED (no alignment requirement on caller buffers).
std::mutex g_plan_mutex;
std::map<std::pair<int, std::size_t>, fftw_plan> g_plan_cache;

fftw_plan acquire_plan(fftw_r2r_kind kind, std::size_t n) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  const auto key = std::make_pair(static_cast<int>(kind), n);
  auto it = g_plan_cache.find(key);
  if (it != g_plan_cache.end()) return it->second;
  std::vector<double> in(n, 0.0), out(n, 0.0);
  fftw_plan p = fftw_plan_r2r_1d(static_cast<int>(n), in.data(), out.data(), kind,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (p == nullptr) throw Error("dst: FFTW plan creation failed for length " + std::to_string(n));
  g_plan_cache.emplace(key, p);
  return p;
}

// Apply the real type-I DST of length L to the real and imaginary parts of
// `in`, scaling the result by `scale`.
std::vector<cx> rodft00_complex(const std::vector<cx>& in, double scale) {
  const std::size_t L = in.size();
  fftw_plan plan = acquire_plan(FFTW_RODFT00, L);
  std::vector<double> buf_in(L), buf_out(L);
  std::vector<cx> out(L);
  for (std::size_t i = 0; i < L; ++i) buf_in[i] = in[i].real();
  fftw_execute_r2r(plan, buf_in.data(), buf_out.data());
  for (std::size_t i = 0; i < L; ++i) out[i] = cx(buf_out[i] * scale, 0.0);
  for (std::size_t i = 0; i < L; ++i) buf_in[i] = in[i].imag();
  fftw_execute_r2r(plan, buf_in.data(), buf_out.data());
  for (std::size_t i = 0; i < L; ++i) out[i] = cx(out[i].real(), buf_out[i] * scale);
  return out;
}

}  // namespace

SpectralCoeffs dst_forward(const RadialField& u) {
  if (u.g.size() != u.grid.nodes())
    throw InputError("dst_forward: sample length does not match grid");
  SpectralCoeffs c(u.grid);
  c.b = rodft00_complex(u.g, 1.0 / static_cast<double>(u.grid.M));
  return c;
}

RadialField dst_inverse(const SpectralCoeffs& c) {
  if (c.b.size() != c.grid.nodes())
    throw InputError("dst_inverse: coefficient length does not match grid");
  RadialField u(c.grid);
  u.g = rodft00_complex(c.b, 0.5);
  return u;
}

std::vector<cx> cosine_series_eval(const RadialGrid& grid, const std::vector<cx>& c) {
  if (c.size() != grid.nodes())
    throw InputError("cosine_series_eval: coefficient length does not match grid");
  // REDFT00 of length M+1 with zero endpoint entries returns
  //   Y_j = 2 * sum_{n=1}^{M-1} c_n cos(pi j n / M),  j = 0..M;
  // the interior values j = 1..M-1 give the requested sums after halving.
  const std::size_t n = grid.M + 1;
  fftw_plan plan = acquire_plan(FFTW_REDFT00, n);
  std::vector<double> buf_in(n, 0.0), buf_out(n, 0.0);
  std::vector<cx> out(grid.nodes());
  for (int part = 0; part < 2; ++part) {
    buf_in.assign(n, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i)
      buf_in[i + 1] = (part == 0) ? c[i].real() : c[i].imag();
    fftw_execute_r2r(plan, buf_in.data(), buf_out.data());
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double v = 0.5 * buf_out[i + 1];
      out[i] = (part == 0) ? cx(v, 0.0) : cx(out[i].real(), v);
    }
  }
  return out;
}

}  // namespace nlslab
