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

#include "hyparr/hyde.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "hyparr/arrangement.hpp"
#include "hyparr/error.hpp"
#include "hyparr/factstats.hpp"
#include "hyparr/validorder.hpp"
#include "hyparr/weyl.hpp"

namespace hyparr {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Degree-n monic (A) or even monic of degree 2n (B) from its code.
FqPoly polynomial_from_code(Family family, int n, int q, std::uint64_t code) {
  if (family == Family::A) return FqPoly::monic_from_code(q, n, code);
  std::vector<int> c(static_cast<std::size_t>(2 * n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(2 * i)] = static_cast<int>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  c.back() = 1;
  return FqPoly(q, std::move(c));
}

ConjClassLabel type_of(Family family, const FqPoly& f, const IrreducibleSieve& sieve) {
  if (family == Family::A) return ConjClassLabel{Family::A, factorization_type(f, sieve), {}};
  return even_factorization_type(f, sieve);
}

void require_admissible(Family family, int q) {
  if (!is_prime(q)) throw InputError(std::to_string(q) + " is not prime");
  if (family == Family::B && q == 2) throw InputError("type B needs odd primes");
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string join(const std::vector<Rat>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  return os.str();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

Census factorization_census(Family family, int n, int q, int threads) {
  require_admissible(family, q);
  if (n < 1) throw InputError("n must be positive");
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(q), n);
  const IrreducibleSieve sieve(q, family == Family::A ? n : 2 * n);
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), 1, total));
  std::vector<Census> partial(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    Census& c = partial[static_cast<std::size_t>(w)];
    for (std::uint64_t code = lo; code < hi; ++code) ++c[type_of(family, polynomial_from_code(family, n, q, code), sieve)];
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Census census;
  for (const auto& l : all_labels(family, n)) census[l] = 0;
  for (const auto& c : partial) {
    for (const auto& [l, k] : c) census[l] += k;
  }
  return census;
}

const Census& CensusCache::get(Family family, int n, int q) {
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find({family, n, q});
    if (it != cache_.end()) return it->second;
  }
  Census c = factorization_census(family, n, q, threads_);
  std::lock_guard lock(mu_);
  return cache_.emplace(std::make_tuple(family, n, q), std::move(c)).first->second;
}

Rat lhs_sum(Family family, int n, int q, const ClassFunction& chi, CensusCache* cache) {
  if (chi.family != family || chi.n != n) throw InputError("class function is for a different group");
  CensusCache local;
  const Census& census = (cache != nullptr ? *cache : local).get(family, n, q);
  Rat sum = 0;
  for (const auto& [l, k] : census) {
    if (k != 0) sum += Rat(static_cast<unsigned long>(k)) * chi(l);
  }
  return sum;
}

bool admissible_prime(Family family, int q) { return is_prime(q) && (family == Family::A || q != 2); }

std::vector<int> admissible_primes(Family family, int count, const std::vector<int>& skip) {
  std::vector<int> out;
  for (int q = 2; static_cast<int>(out.size()) < count; ++q) {
    if (admissible_prime(family, q) && std::find(skip.begin(), skip.end(), q) == skip.end()) out.push_back(q);
  }
  return out;
}

PrimePlan plan_primes(Family family, int n, const std::vector<int>& primes, int holdout) {
  for (std::size_t i = 0; i < primes.size(); ++i) {
    require_admissible(family, primes[i]);
    if (i > 0 && primes[i] <= primes[i - 1]) throw InputError("primes must be sorted and distinct");
  }
  if (holdout != 0) {
    require_admissible(family, holdout);
    if (std::find(primes.begin(), primes.end(), holdout) != primes.end()) {
      throw InputError("holdout prime must not be an interpolation prime");
    }
  }
  PrimePlan plan;
  plan.primes = primes;
  for (int q = 2; static_cast<int>(plan.primes.size()) < n + 1; ++q) {
    if (admissible_prime(family, q) && q != holdout &&
        std::find(plan.primes.begin(), plan.primes.end(), q) == plan.primes.end()) {
      plan.primes.push_back(q);
    }
  }
  std::sort(plan.primes.begin(), plan.primes.end());
  plan.holdout = holdout;
  if (plan.holdout == 0) {
    for (int q = plan.primes.back() + 1;; ++q) {
      if (admissible_prime(family, q)) {
        plan.holdout = q;
        break;
      }
    }
  }
  return plan;
}

Extraction extract_multiplicities(Family family, int n, const ClassFunction& chi, const PrimePlan& plan,
                                  CensusCache& cache) {
  chi.validate();
  std::vector<InterpolationNode> nodes;
  std::vector<int> qs = plan.primes;
  qs.push_back(plan.holdout);
  for (int q : qs) {
    Rat value = lhs_sum(family, n, q, chi, &cache);
    nodes.push_back({Rat(q), std::move(value)});
  }
  Extraction e;
  e.plan = plan;
  e.lhs = poly_interpolate(nodes, n);
  for (int i = 0; i <= n; ++i) e.multiplicities.push_back(e.lhs.coefficient(n - i));
  return e;
}

EquivariantPoincare equivariant_poincare(Family family, int n, const PrimePlan& plan, CensusCache& cache) {
  const WeylGroup g(family, n);
  const auto sizes = class_sizes(g);
  EquivariantPoincare ep{family, n, std::vector<ClassFunction>(static_cast<std::size_t>(n) + 1, zero_class_function(family, n))};
  for (const auto& [label, size] : sizes) {
    const Extraction e = extract_multiplicities(family, n, indicator(family, n, label), plan, cache);
    const Rat scale = Rat(static_cast<unsigned long>(g.order())) / Rat(static_cast<unsigned long>(size));
    for (int i = 0; i <= n; ++i) ep.table[static_cast<std::size_t>(i)].values[label] = scale * e.multiplicities[static_cast<std::size_t>(i)];
  }
  return ep;
}

namespace {

bool is_nonnegative_integer(const Rat& r) { return r.get_den() == 1 && r >= 0; }

std::vector<std::int64_t> trimmed_coeffs(const QPoly& p) {
  std::vector<std::int64_t> out;
  for (const auto& c : p.coeffs()) out.push_back(mpz_class(c.get_num()).get_si());
  if (out.empty()) out.push_back(0);
  return out;
}

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.details += std::string(r.details.empty() ? "" : "; ") + "error: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

VerificationReport run_verification_suite(Family family, int n, const SuiteConfig& config) {
  if (n < 1) throw InputError("n must be positive");
  VerificationReport report{family, n, config.seed, plan_primes(family, n, config.primes, config.holdout), {}, false};
  CensusCache cache(config.threads);
  const WeylGroup g(family, n);
  const PrimePlan& plan = report.plan;

  std::vector<std::pair<std::string, ClassFunction>> basis;
  if (family == Family::A) {
    for (const auto& p : partitions_of(n)) basis.emplace_back("chi" + to_string(p), sn_irreducible_character(p));
  } else {
    basis = b_builtin_characters(n);
  }

  report.checks.push_back(timed("multiplicities", [&](CheckResult& r) {
    r.pass = true;
    std::ostringstream os;
    for (const auto& [name, chi] : basis) {
      const Extraction e = extract_multiplicities(family, n, chi, plan, cache);
      const bool ok = std::all_of(e.multiplicities.begin(), e.multiplicities.end(), is_nonnegative_integer);
      r.pass = r.pass && ok;
      os << name << ": (" << join(e.multiplicities) << ")" << (ok ? "" : " NOT nonnegative integers") << "; ";
    }
    os << "primes " << join(plan.primes) << ", holdout " << plan.holdout;
    r.details = os.str();
  }));

  std::optional<EquivariantPoincare> ep;
  report.checks.push_back(timed("regular", [&](CheckResult& r) {
    ep = equivariant_poincare(family, n, plan, cache);
    ClassFunction sum = zero_class_function(family, n);
    for (const auto& c : ep->table) sum = sum + c;
    r.pass = sum == regular_character(family, n);
    r.details = r.pass ? "sum of ch H^{2i} equals the regular character" : "sum differs from the regular character";
  }));

  const Arrangement a = reflection_arrangement(g);
  std::optional<ArrangementData> data;
  std::optional<CellDecomposition> cells;
  report.checks.push_back(timed("dimensions", [&](CheckResult& r) {
    if (!ep) throw VerificationFailure("equivariant Poincare table unavailable");
    std::vector<std::int64_t> from_chars;
    const ConjClassLabel id = identity_label(family, n);
    for (const auto& c : ep->table) {
      const Rat& v = c(id);
      if (v.get_den() != 1) throw VerificationFailure("non-integral dimension");
      from_chars.push_back(mpz_class(v.get_num()).get_si());
    }
    from_chars = trimmed(std::move(from_chars));
    data.emplace(a);
    cells = cell_decomposition(*data, find_valid_order(*data, config.seed));
    const auto from_cells = betti_from_cells(*cells, a.dim());
    const auto whitney = whitney_betti(a, data->flats);
    const auto exponents = trimmed(trimmed_coeffs(exponent_product(g)));
    r.pass = from_chars == from_cells && from_cells == whitney && whitney == exponents;
    r.details = "characters (" + join(from_chars) + "), cells (" + join(from_cells) + "), whitney (" + join(whitney) +
                "), exponents (" + join(exponents) + ")";
  }));

  report.checks.push_back(timed("point_counts", [&](CheckResult& r) {
    r.pass = true;
    std::ostringstream os;
    std::vector<int> qs = plan.primes;
    qs.push_back(plan.holdout);
    for (int q : qs) {
      const std::uint64_t lhs = count_points_XA(a, q);
      std::uint64_t rhs = 1;
      for (int m : g.exponents()) rhs *= static_cast<std::uint64_t>(q + m);
      r.pass = r.pass && lhs == rhs;
      os << "q=" << q << ": " << lhs << (lhs == rhs ? " = " : " != ") << rhs << "; ";
    }
    r.details = os.str();
  }));

  report.checks.push_back(timed("bridge", [&](CheckResult& r) {
    r.pass = true;
    std::ostringstream os;
    std::vector<int> qs;
    for (int q : plan.primes) {
      if (qs.empty() || ipow(static_cast<std::uint64_t>(q), n) <= config.bridge_budget) qs.push_back(q);
    }
    for (int q : qs) {
      const IrreducibleSieve sieve(q, family == Family::A ? n : 2 * n);
      RootFinder finder(sieve);
      std::uint64_t mismatches = 0;
      const std::uint64_t total = ipow(static_cast<std::uint64_t>(q), n);
      for (std::uint64_t code = 0; code < total; ++code) {
        const FqPoly f = polynomial_from_code(family, n, q, code);
        const OrbitLift lift = finder.lift(family, f);
        if (frobenius_class(g, *lift.field, lift.y) != type_of(family, f, sieve)) ++mismatches;
      }
      r.pass = r.pass && mismatches == 0;
      os << "q=" << q << ": " << total << " polynomials, " << mismatches << " mismatches; ";
    }
    r.details = os.str();
  }));

  report.checks.push_back(timed("inertia", [&](CheckResult& r) {
    if (!cells) throw VerificationFailure("cell decomposition unavailable");
    const QPoly inertia = inertia_polynomial(g);
    r.pass = true;
    std::ostringstream os;
    for (int k = 0; k <= n; ++k) {
      const auto it = cells->census.find(a.dim() - k);
      const std::int64_t count = it == cells->census.end() ? 0 : it->second;
      const bool ok = inertia.coefficient(k) == count;
      r.pass = r.pass && ok;
      os << "q^" << k << ": " << to_string(inertia.coefficient(k)) << (ok ? " = " : " != ") << count << "; ";
    }
    r.details = os.str();
  }));

  report.pass = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult& c) { return c.pass; });
  return report;
}

}  // namespace hyparr
