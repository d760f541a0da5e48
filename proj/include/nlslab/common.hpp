#pragma once
/// \file common.hpp
/// Shared scalar types, error categories, and small utilities.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nlslab {

using cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// A violated precondition on caller-supplied data (bad exponent, t = 0,
/// non-finite sample, mismatched lengths, ...). The message names the
/// offending value or relation.
struct InputError : Error {
  explicit InputError(const std::string& what_arg) : Error(what_arg) {}
};

/// Optional sink for non-fatal diagnostics (resolution, truncation, decay).
/// Pass nullptr to discard warnings.
using WarningSink = std::vector<std::string>*;

inline void warn(WarningSink sink, std::string msg) {
  if (sink != nullptr) sink->push_back(std::move(msg));
}

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace nlslab
