#include "radezero/sampling.hpp"

#include "radezero/error.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace radezero {

std::string_view sign_family_name(SignFamily family) noexcept {
  switch (family) {
    case SignFamily::Rademacher: return "rademacher";
    case SignFamily::Steinhaus: return "steinhaus";
    case SignFamily::Gaussian: return "gaussian";
  }
  return "rademacher";
}

SignFamily sign_family_from_name(std::string_view name) {
  for (SignFamily f : {SignFamily::Rademacher, SignFamily::Steinhaus, SignFamily::Gaussian}) {
    if (sign_family_name(f) == name) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown sign family '" + std::string(name) + "'");
}

SignAssignment SignAssignment::all_plus(int entries) {
  return {Eigen::ArrayXcd::Ones(entries), 0, SignFamily::Rademacher};
}

SignAssignment SignAssignment::from_signs(const std::vector<int>& signs) {
  SignAssignment out{Eigen::ArrayXcd(static_cast<Eigen::Index>(signs.size())), 0, SignFamily::Rademacher};
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] != 1 && signs[k] != -1) throw Error(ErrorCode::InvalidArgument, "signs must be +1 or -1");
    out.values[static_cast<Eigen::Index>(k)] = static_cast<double>(signs[k]);
  }
  return out;
}

SignAssignment SignAssignment::negated() const {
  SignAssignment out = *this;
  out.values = -values;
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(base) ^ splitmix64(stream ^ 0xD1B54A32D192ED03ULL));
}

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

SignAssignment sample_signs(int K, std::uint64_t seed, SignFamily family) {
  if (K < 0) throw Error(ErrorCode::InvalidArgument, "K must be non-negative");
  std::mt19937_64 gen(seed);
  SignAssignment out{Eigen::ArrayXcd(K + 1), seed, family};
  constexpr double two_pi = 2 * std::numbers::pi;
  for (int k = 0; k <= K; ++k) {
    switch (family) {
      case SignFamily::Rademacher:
        out.values[k] = (gen() >> 63) ? -1.0 : 1.0;
        break;
      case SignFamily::Steinhaus: {
        const double angle = two_pi * uniform01(gen);
        out.values[k] = Complex(std::cos(angle), std::sin(angle));
        break;
      }
      case SignFamily::Gaussian: {
        // Standard complex normal, E|chi|^2 = 1 (Box-Muller).
        const double u1 = 1.0 - uniform01(gen);
        const double u2 = uniform01(gen);
        const double radius = std::sqrt(-std::log(u1));
        out.values[k] = Complex(radius * std::cos(two_pi * u2), radius * std::sin(two_pi * u2));
        break;
      }
    }
  }
  return out;
}

SignEnumeration::SignEnumeration(int entries, bool pin_first)
    : entries_(entries), pin_first_(pin_first), size_(0) {
  if (entries < 0) throw Error(ErrorCode::InvalidArgument, "entries must be non-negative");
  if (entries > kMaxEnumerationEntries) {
    throw Error(ErrorCode::TooLarge, "enumeration of " + std::to_string(entries) + " signs exceeds 2^24");
  }
  const int free = pin_first && entries > 0 ? entries - 1 : entries;
  size_ = std::uint64_t{1} << free;
}

SignAssignment SignEnumeration::operator[](std::uint64_t index) const {
  SignAssignment out{Eigen::ArrayXcd(entries_), index, SignFamily::Rademacher};
  const int free = pin_first_ && entries_ > 0 ? entries_ - 1 : entries_;
  const int offset = entries_ - free;
  for (int j = 0; j < offset; ++j) out.values[j] = 1.0;
  for (int j = 0; j < free; ++j) {
    const bool minus = (index >> (free - 1 - j)) & 1U;
    out.values[offset + j] = minus ? -1.0 : 1.0;
  }
  return out;
}

SignEnumeration enumerate_signs(int entries, bool pin_first) { return SignEnumeration(entries, pin_first); }

}  // namespace radezero
