#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace iat {

/// Portable normal generator.
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the standard.
/// Uniforms are the top 53 bits scaled by 2^-53, shifted to (0, 1].
/// Normals come from the basic Box-Muller transform; each call to
/// next_pair() consumes two engine outputs and returns both variates.
/// std::normal_distribution is deliberately not used because its algorithm
/// differs between standard library implementations.
class NormalRng {
 public:
  explicit NormalRng(std::uint64_t seed) : engine_(seed) {}

  double uniform_open();  // (0, 1]
  std::pair<double, double> next_pair();
  double next();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Standard-normal innovations for the two structural shocks, one
// Box-Muller pair per period: (eps_u[t], eps_r[t]).
struct ShockDraws {
  std::uint64_t seed = 0;
  std::vector<double> eps_u;
  std::vector<double> eps_r;

  std::size_t size() const { return eps_u.size(); }
};

ShockDraws draw_shocks(std::uint64_t seed, std::size_t periods);

// FNV-1a over the raw bytes of a double array; used to audit that
// innovation arrays are shared across experiment variants.
std::uint64_t fnv1a(const void* data, std::size_t bytes,
                    std::uint64_t h = 0xcbf29ce484222325ULL);
std::uint64_t hash_doubles(const std::vector<double>& v);

}  // namespace iat
