#include "iat/rng.hpp"

#include <cmath>
#include <numbers>

namespace iat {

double NormalRng::uniform_open() {
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  return (static_cast<double>(engine_() >> 11) + 1.0) * kScale;
}

std::pair<double, double> NormalRng::next_pair() {
  const double u1 = uniform_open();
  const double u2 = uniform_open();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

double NormalRng::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  auto [a, b] = next_pair();
  spare_ = b;
  have_spare_ = true;
  return a;
}

ShockDraws draw_shocks(std::uint64_t seed, std::size_t periods) {
  ShockDraws d;
  d.seed = seed;
  d.eps_u.resize(periods);
  d.eps_r.resize(periods);
  NormalRng rng(seed);
  for (std::size_t t = 0; t < periods; ++t) {
    auto [a, b] = rng.next_pair();
    d.eps_u[t] = a;
    d.eps_r[t] = b;
  }
  return d;
}

std::uint64_t fnv1a(const void* data, std::size_t bytes, std::uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t hash_doubles(const std::vector<double>& v) {
  return fnv1a(v.data(), v.size() * sizeof(double));
}

}  // namespace iat
