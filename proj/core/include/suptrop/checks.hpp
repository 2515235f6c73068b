#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "suptrop/matrix.hpp"

namespace suptrop {

/// Deterministic cross-platform randomness for property suites (the standard
/// distributions are implementation-defined, so raw modular draws are used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int num, int den) { return uniform(1, den) <= num; }
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

/// Entry distribution for random matrices: integer values -5..9 or thirds
/// n/3, ghost with probability 1/4, bottom with a per-suite probability.
struct GenCfg {
  int bottom_num = 1;
  int bottom_den = 5;
  int ghost_num = 1;
  int ghost_den = 4;
  int third_num = 1;
  int third_den = 4;
  int lo = -5;
  int hi = 9;
  bool allow_ghost = true;
};

Element random_element(Rng& rng, const GenCfg& cfg);
Matrix random_matrix(Rng& rng, int n, const GenCfg& cfg);
Vec random_vector(Rng& rng, int n, const GenCfg& cfg);

struct CheckResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;  // rendering of the first counterexample
  bool ok() const { return failures == 0; }
};

/// Named property suites exposed by the CLI `check` verb:
///   hc      : Hamilton-Cayley for f_A and the tangible lift (n ≤ 5)
///   detmul  : |AB| ⊨ |A||B|, equality when |AB| is tangible (n ≤ 5)
///   adjid   : |A adj A| = |A|^n, |adj A| = |A|^{n-1}, (A adj A)² =
///             |A|·A adj A, |I_A| = 0 (n ≤ 4)
///   base    : witness exists iff not nonsingular, all witnesses verify,
///             rank-defect cover whenever det = -inf (n ≤ 5)
///   laplace : row/column Laplace expansion and foreign-expansion ghosts
///             (n ≤ 5)
CheckResult run_check(const std::string& name, std::uint64_t seed, int cases);

/// All suite names, for the CLI.
std::vector<std::string> check_names();

}  // namespace suptrop
