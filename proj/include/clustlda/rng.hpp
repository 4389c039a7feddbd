#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Core>

namespace clustlda {

// Deterministic random source. The engine is the standard mt19937_64 but
// every distribution is implemented here, so a given seed produces the same
// stream regardless of the standard library in use.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // uniform on [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n)
  int uniform_int(int n);

  // standard normal via the Marsaglia polar method (one cached spare)
  double normal();

  Eigen::VectorXd normal_vector(int n);

  // Gamma(shape, 1) via Marsaglia-Tsang, with the shape<1 boost
  double gamma(double shape);

  // symmetric Dirichlet(concentration) on the n-simplex
  Eigen::VectorXd dirichlet(double concentration, int n);

  // Poisson(mean) by exponential-gap inversion; mean is split into chunks of
  // at most 30 so the running product never underflows
  int poisson(double mean);

  // index draw from an unnormalized non-negative weight vector
  int categorical(const Eigen::VectorXd& weights);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Named substream derivation: hashes the master seed together with a domain
// string and up to two indices, so independent parts of a run (datasets,
// restarts, initializers) draw from unrelated streams.
std::uint64_t derive_seed(std::uint64_t master, std::string_view domain,
                          std::uint64_t a = 0, std::uint64_t b = 0);

}  // namespace clustlda
