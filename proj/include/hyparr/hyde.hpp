// Copyright 2026 The hyparr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "hyparr/characters.hpp"
#include "hyparr/partition.hpp"
#include "hyparr/qpoly.hpp"

namespace hyparr {

// Number of monic degree-n polynomials (type A) or even monic degree-2n
// polynomials (type B) over F_q of each factorization type.
using Census = std::map<ConjClassLabel, std::uint64_t>;

Census factorization_census(Family family, int n, int q, int threads = 1);

// Thread-safe memo of censuses keyed by (family, n, q).
class CensusCache {
 public:
  explicit CensusCache(int threads = 1) : threads_(threads) {}
  const Census& get(Family family, int n, int q);

 private:
  int threads_;
  std::mutex mu_;
  std::map<std::tuple<Family, int, int>, Census> cache_;
};

// Sum of chi over the factorization types of all polynomials counted above.
// Throws InputError for non-prime q, or even q in type B.
Rat lhs_sum(Family family, int n, int q, const ClassFunction& chi, CensusCache* cache = nullptr);

bool admissible_prime(Family family, int q);
// Smallest admissible primes (A: 2,3,5,..; B: 3,5,7,..) not in `skip`.
std::vector<int> admissible_primes(Family family, int count, const std::vector<int>& skip = {});

struct PrimePlan {
  std::vector<int> primes;  // interpolation nodes, at least n+1
  int holdout = 0;
};

// Validates user primes (sorted, distinct, admissible) and extends them to
// n+1 nodes with the next admissible primes; the default holdout is the next
// admissible prime after the nodes. Throws InputError on bad input.
PrimePlan plan_primes(Family family, int n, const std::vector<int>& primes = {}, int holdout = 0);

struct Extraction {
  QPoly lhs;                       // LHS(q), degree <= n
  std::vector<Rat> multiplicities;  // index i: coefficient of q^{n-i}, i = 0..n
  PrimePlan plan;
};

// Throws VerificationFailure if the interpolant misses the lhs at an extra
// node or the holdout.
Extraction extract_multiplicities(Family family, int n, const ClassFunction& chi, const PrimePlan& plan,
                                  CensusCache& cache);

struct EquivariantPoincare {
  Family family;
  int n;
  std::vector<ClassFunction> table;  // ch H^{2i}, i = 0..n
};

EquivariantPoincare equivariant_poincare(Family family, int n, const PrimePlan& plan, CensusCache& cache);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0;
};

struct VerificationReport {
  Family family;
  int n;
  std::uint64_t seed;
  PrimePlan plan;
  std::vector<CheckResult> checks;
  bool pass = false;
};

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::vector<int> primes;
  int holdout = 0;
  int threads = 1;
  // Bridge check runs on primes with q^n below this bound (and always on the smallest).
  std::uint64_t bridge_budget = 2500;
};

VerificationReport run_verification_suite(Family family, int n, const SuiteConfig& config);

}  // namespace hyparr
