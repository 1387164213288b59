#pragma once

#include "radezero/numerics.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace radezero {

enum class SignFamily { Rademacher, Steinhaus, Gaussian };

std::string_view sign_family_name(SignFamily family) noexcept;
SignFamily sign_family_from_name(std::string_view name);

/// Random multipliers xi_0..xi_K applied to the Taylor coefficients.
struct SignAssignment {
  Eigen::ArrayXcd values;
  std::uint64_t seed = 0;
  SignFamily family = SignFamily::Rademacher;

  int size() const noexcept { return static_cast<int>(values.size()); }
  Complex operator[](int k) const { return values[k]; }

  static SignAssignment all_plus(int entries);
  static SignAssignment from_signs(const std::vector<int>& signs);
  SignAssignment negated() const;
};

/// SplitMix64 finalizer; the building block of every seed derivation.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent substream seed for (base, stream). Order of evaluation of the
/// streams does not matter.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

/// 53-bit uniform in [0, 1). std::uniform_real_distribution is avoided because
/// its output is implementation-defined.
double uniform01(std::mt19937_64& gen);

/// K+1 multipliers (indices 0..K), a deterministic function of (K, seed, family).
SignAssignment sample_signs(int K, std::uint64_t seed, SignFamily family = SignFamily::Rademacher);

inline constexpr int kMaxEnumerationEntries = 24;

/// Lexicographic listing (+ before -) of all sign vectors with `entries`
/// components, optionally with the first entry pinned to +1.
class SignEnumeration {
 public:
  SignEnumeration(int entries, bool pin_first);

  std::uint64_t size() const noexcept { return size_; }
  int entries() const noexcept { return entries_; }
  bool pinned() const noexcept { return pin_first_; }
  SignAssignment operator[](std::uint64_t index) const;

 private:
  int entries_;
  bool pin_first_;
  std::uint64_t size_;
};

/// Throws TooLarge when entries > 24.
SignEnumeration enumerate_signs(int entries, bool pin_first = false);

}  // namespace radezero
