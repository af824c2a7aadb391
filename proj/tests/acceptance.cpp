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

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "hyparr/arrangement.hpp"
#include "hyparr/characters.hpp"
#include "hyparr/factstats.hpp"
#include "hyparr/hyde.hpp"
#include "hyparr/validorder.hpp"
#include "hyparr/weyl.hpp"

namespace hyparr {
namespace {

constexpr double kBudgetAC1 = 30;
constexpr double kBudgetAC2 = 120;
constexpr double kBudgetAC3 = 120;
constexpr double kBudgetAC4 = 60;
constexpr double kBudgetAC5 = 300;
constexpr double kBudgetAC6 = 60;
constexpr double kBudgetAC7 = 60;
constexpr double kBudgetAC8 = 10;
constexpr int kSeeds = 5;
constexpr int kRandomArrangements = 20;

// Collects the first failure; later expectations are still evaluated.
struct Outcome {
  bool ok = true;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t ipow(int q, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<std::uint64_t>(q);
  return r;
}

std::vector<Arrangement> random_family() {
  std::vector<Arrangement> out;
  for (int s = 0; s < kRandomArrangements; ++s) out.push_back(random_arrangement(static_cast<std::uint64_t>(s), 3, 6));
  return out;
}

std::vector<ArrangementData> all_test_arrangements() {
  std::vector<ArrangementData> out;
  for (int n = 1; n <= 5; ++n) out.emplace_back(braid_arrangement(n));
  for (int n = 1; n <= 3; ++n) out.emplace_back(type_b_arrangement(n));
  for (auto& a : random_family()) out.emplace_back(std::move(a));
  return out;
}

std::vector<std::int64_t> coefficients(const QPoly& p) {
  std::vector<std::int64_t> out;
  for (const Rat& c : p.coeffs()) out.push_back(c.get_num().get_si());
  if (out.empty()) out.push_back(0);
  return out;
}

QPoly census_polynomial(const CellDecomposition& cd, int n) {
  std::vector<Rat> c(static_cast<std::size_t>(n + 1), Rat(0));
  for (const auto& [dim, count] : cd.census) c[static_cast<std::size_t>(n - dim)] += Rat(static_cast<long>(count));
  return QPoly(c);
}

Outcome ac1() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    o.expect(enumerate_chambers(braid_arrangement(n)).size() == factorial(n), "braid:" + std::to_string(n));
  }
  for (int n = 1; n <= 3; ++n) {
    o.expect(enumerate_chambers(type_b_arrangement(n)).size() == ipow(2, n) * factorial(n),
             "typeB:" + std::to_string(n));
  }
  int idx = 0;
  for (const auto& a : random_family()) {
    const FlatsPoset f = enumerate_flats(a);
    Integer total = 0;
    for (const auto& m : f.mobius) total += abs(m);
    o.expect(Integer(static_cast<long>(enumerate_chambers(a).size())) == total,
             "Zaslavsky on random arrangement " + std::to_string(idx));
    ++idx;
  }
  o.note = o.ok ? "braid 1..5, typeB 1..3, 20 random (Zaslavsky)" : o.note;
  return o;
}

Outcome ac2() {
  Outcome o;
  int certified = 0;
  for (const auto& d : all_test_arrangements()) {
    for (int s = 0; s < kSeeds; ++s) {
      const ValidOrder vo = find_valid_order(d, static_cast<std::uint64_t>(s));
      const OrderCheck ck = verify_valid_order(d, vo.order);
      o.expect(ck.valid && ck.certificate && ck.certificate->star_flat_ids == vo.star_flat_ids,
               "certificate mismatch");
      ++certified;
    }
  }
  const ArrangementData b3(braid_arrangement(3));
  auto find = [&](QVec x) {
    const SignVector s = b3.a.signs_at(x);
    for (std::size_t i = 0; i < b3.chambers.size(); ++i)
      if (b3.chambers[i].signs == s) return static_cast<int>(i);
    return -1;
  };
  const int first = find({Rat(3), Rat(2), Rat(1)});
  const int second = find({Rat(1), Rat(2), Rat(3)});
  std::vector<int> order{first, second};
  for (int c = 0; c < 6; ++c)
    if (c != first && c != second) order.push_back(c);
  const OrderCheck bad = verify_valid_order(b3, order);
  o.expect(!bad.valid && bad.failing_index && *bad.failing_index + 1 == 2, "adversarial order not rejected at 2");
  if (o.ok) {
    o.note = std::to_string(certified) + " certified orders; adversarial braid:3 order rejected at index " +
             std::to_string(*bad.failing_index + 1) + " (1-based)";
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  const std::map<int, std::int64_t> x2{{2, 1}, {1, 1}};
  const std::map<int, std::int64_t> x3{{3, 1}, {2, 3}, {1, 2}};
  const ArrangementData b2(braid_arrangement(2));
  const ArrangementData b3(braid_arrangement(3));
  o.expect(cell_decomposition(b2, find_valid_order(b2, 0)).census == x2, "braid:2 census");
  o.expect(cell_decomposition(b3, find_valid_order(b3, 0)).census == x3, "braid:3 census");
  for (const auto& d : all_test_arrangements()) {
    std::map<int, std::int64_t> first;
    for (int s = 0; s < kSeeds; ++s) {
      const CellDecomposition cd = cell_decomposition(d, find_valid_order(d, static_cast<std::uint64_t>(s)));
      o.expect(betti_from_cells(cd, d.a.dim()) == whitney_betti(d.a, d.flats), "cells vs whitney");
      if (s == 0) first = cd.census;
      o.expect(cd.census == first, "census depends on the seed");
    }
  }
  for (auto [f, max_n] : std::vector<std::pair<Family, int>>{{Family::A, 5}, {Family::B, 3}}) {
    for (int n = 1; n <= max_n; ++n) {
      const WeylGroup g(f, n);
      const ArrangementData d(reflection_arrangement(g));
      const auto cells = betti_from_cells(cell_decomposition(d, find_valid_order(d, 0)), n);
      o.expect(cells == coefficients(exponent_product(g)), group_name(f, n) + " cells vs exponents");
      o.expect(whitney_betti(d.a, d.flats) == coefficients(exponent_product(g)), group_name(f, n) + " whitney");
    }
  }
  if (o.ok) o.note = "braid:2 {2:1,1:1}, braid:3 {3:1,2:3,1:2}; cells = whitney = exponents; 5 seeds";
  return o;
}

Outcome ac4() {
  Outcome o;
  std::ostringstream os;
  for (int n = 1; n <= 4; ++n) {
    for (int q : {2, 3, 5}) {
      std::uint64_t rising = 1;
      for (int i = 0; i < n; ++i) rising *= static_cast<std::uint64_t>(q + i);
      const std::uint64_t got = count_points_XA(braid_arrangement(n), q);
      o.expect(got == rising, "n=" + std::to_string(n) + " q=" + std::to_string(q));
      if (n == 4) os << "q=" << q << ": " << got << " ";
    }
  }
  if (o.ok) o.note = "n<=4 rising Pochhammer; n=4 " + os.str();
  return o;
}

bool natural(const Rat& r) { return r.get_den() == 1 && r >= 0; }

Outcome ac5() {
  Outcome o;
  CensusCache cache(4);
  for (int n = 1; n <= 4; ++n) {
    const PrimePlan plan = plan_primes(Family::A, n);
    const ClassFunction reg = regular_character(Family::A, n);
    for (const auto& l : partitions_of(n)) {
      const Extraction e = extract_multiplicities(Family::A, n, sn_irreducible_character(l), plan, cache);
      for (const Rat& m : e.multiplicities) o.expect(natural(m), "multiplicity for " + to_string(l));
    }
    const EquivariantPoincare p = equivariant_poincare(Family::A, n, plan, cache);
    ClassFunction sum = zero_class_function(Family::A, n);
    std::vector<std::int64_t> dims;
    for (const auto& h : p.table) {
      sum = sum + h;
      dims.push_back(h(identity_label(Family::A, n)).get_num().get_si());
    }
    while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
    o.expect(sum == reg, "regular character n=" + std::to_string(n));
    const ArrangementData d(braid_arrangement(n));
    o.expect(dims == betti_from_cells(cell_decomposition(d, find_valid_order(d, 0)), n),
             "dimensions n=" + std::to_string(n));
    if (n == 2) o.expect(p.table[1] == sn_irreducible_character({1, 1}), "ch H^2(S_2)");
    if (n == 3) {
      o.expect(p.table[1] == sn_irreducible_character({1, 1, 1}) + sn_irreducible_character({2, 1}), "ch H^2(S_3)");
      o.expect(p.table[2] == sn_irreducible_character({2, 1}), "ch H^4(S_3)");
    }
  }
  if (o.ok) o.note = "n<=4 with held-out prime; natural multiplicities; regular; dims; S_2, S_3 tables";
  return o;
}

Outcome ac6() {
  Outcome o;
  CensusCache cache(4);
  for (int n = 1; n <= 2; ++n) {
    const PrimePlan plan = plan_primes(Family::B, n, n == 1 ? std::vector<int>{3, 5} : std::vector<int>{3, 5, 7});
    for (const auto& [name, chi] : b_builtin_characters(n)) {
      const Extraction e = extract_multiplicities(Family::B, n, chi, plan, cache);
      for (const Rat& m : e.multiplicities) o.expect(natural(m), name + " n=" + std::to_string(n));
    }
    const EquivariantPoincare p = equivariant_poincare(Family::B, n, plan, cache);
    ClassFunction sum = zero_class_function(Family::B, n);
    for (const auto& h : p.table) sum = sum + h;
    o.expect(sum == regular_character(Family::B, n), "regular character B" + std::to_string(n));
    if (n == 1) {
      o.expect(p.table[0] == trivial_character(Family::B, 1) && p.table[1] == b_det_character(1), "B1 table");
    }
  }
  if (o.ok) o.note = "B1, B2 over 3,5,7 with held-out prime; B1 = {trivial, sign}; regular";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::uint64_t checked = 0;
  for (int q : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      const IrreducibleSieve s(q, n);
      RootFinder rf(s);
      const WeylGroup g(Family::A, n);
      for (std::uint64_t c = 0; c < ipow(q, n); ++c) {
        const FqPoly f = FqPoly::monic_from_code(q, n, c);
        const OrbitLift l = rf.lift(Family::A, f);
        o.expect(frobenius_class(g, *l.field, l.y).lambda == factorization_type(f, s), "A: " + f.to_string());
        ++checked;
      }
    }
  }
  for (int q : {3, 5}) {
    for (int n = 1; n <= 2; ++n) {
      const IrreducibleSieve s(q, 2 * n);
      RootFinder rf(s);
      const WeylGroup g(Family::B, n);
      for (std::uint64_t c = 0; c < ipow(q, n); ++c) {
        std::vector<int> coeffs(static_cast<std::size_t>(2 * n + 1), 0);
        std::uint64_t rest = c;
        for (int i = 0; i < n; ++i) {
          coeffs[static_cast<std::size_t>(2 * i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
          rest /= static_cast<std::uint64_t>(q);
        }
        coeffs.back() = 1;
        const FqPoly f(q, coeffs);
        const OrbitLift l = rf.lift(Family::B, f);
        o.expect(frobenius_class(g, *l.field, l.y) == even_factorization_type(f, s), "B: " + f.to_string());
        ++checked;
      }
    }
  }
  if (o.ok) o.note = std::to_string(checked) + " polynomials, A n<=3 q in {2,3}, B n<=2 q in {3,5}";
  return o;
}

Outcome ac8() {
  Outcome o;
  for (auto [f, max_n] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}}) {
    for (int n = 1; n <= max_n; ++n) {
      const WeylGroup g(f, n);
      const ArrangementData d(reflection_arrangement(g));
      const QPoly inertia = inertia_polynomial(g);
      o.expect(inertia == census_polynomial(cell_decomposition(d, find_valid_order(d, 0)), n),
               group_name(f, n) + " cells");
      o.expect(inertia == exponent_product(g), group_name(f, n) + " exponents");
    }
  }
  if (o.ok) o.note = "A1..A4, B1..B3: inertia = cell census = exponent product";
  return o;
}

}  // namespace
}  // namespace hyparr

int main() {
  using namespace hyparr;
  struct Criterion {
    const char* id;
    const char* title;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "chamber counts", kBudgetAC1, ac1},  {"AC2", "valid orders", kBudgetAC2, ac2},
      {"AC3", "cell census", kBudgetAC3, ac3},     {"AC4", "point counts", kBudgetAC4, ac4},
      {"AC5", "type A statistics", kBudgetAC5, ac5}, {"AC6", "type B statistics", kBudgetAC6, ac6},
      {"AC7", "bridge", kBudgetAC7, ac7},          {"AC8", "inertia identity", kBudgetAC8, ac8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget;
    const bool pass = o.ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s %s: %s (%.2f s, budget %.0f s%s; exact equality) %s\n", c.id, pass ? "PASS" : "FAIL", c.title,
                secs, c.budget, in_budget ? "" : ", exceeded", o.note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
