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

#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "hyparr/characters.hpp"
#include "hyparr/error.hpp"
#include "hyparr/factstats.hpp"
#include "hyparr/hyde.hpp"
#include "hyparr/weyl.hpp"

namespace hyparr {
namespace {

std::uint64_t ipow(int q, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<std::uint64_t>(q);
  return r;
}

ConjClassLabel a_label(Partition p) { return {Family::A, canonical_partition(std::move(p)), {}}; }
ConjClassLabel b_label(Partition l, Partition m) {
  return {Family::B, canonical_partition(std::move(l)), canonical_partition(std::move(m))};
}

FqPoly product(const std::vector<FqPoly>& fs, int q) {
  FqPoly r = FqPoly::constant(q, 1);
  for (const auto& f : fs) r = r * f;
  return r;
}

// Irreducibles of degree d: monic polynomials not a product of two monic
// polynomials of positive degree, marked by multiplying all pairs.
std::set<std::uint64_t> irreducible_codes_by_marking(int q, int d) {
  std::set<std::uint64_t> reducible;
  for (int a = 1; a < d; ++a) {
    for (std::uint64_t ca = 0; ca < ipow(q, a); ++ca) {
      for (std::uint64_t cb = 0; cb < ipow(q, d - a); ++cb) {
        reducible.insert((FqPoly::monic_from_code(q, a, ca) * FqPoly::monic_from_code(q, d - a, cb)).code());
      }
    }
  }
  std::set<std::uint64_t> out;
  for (std::uint64_t c = 0; c < ipow(q, d); ++c) {
    const std::uint64_t full = FqPoly::monic_from_code(q, d, c).code();
    if (!reducible.contains(full)) out.insert(full);
  }
  return out;
}

TEST(FactStats, FactorExamples) {
  const IrreducibleSieve s(2, 3);
  EXPECT_EQ(factor_monic(FqPoly(2, {1, 1, 1}), s), std::vector<FqPoly>{FqPoly(2, {1, 1, 1})});
  EXPECT_EQ(factor_monic(FqPoly(2, {0, 0, 1}), s), (std::vector<FqPoly>{FqPoly(2, {0, 1}), FqPoly(2, {0, 1})}));
  EXPECT_EQ(factor_monic(FqPoly(2, {1, 0, 1}), s), (std::vector<FqPoly>{FqPoly(2, {1, 1}), FqPoly(2, {1, 1})}));
  EXPECT_EQ(factorization_type(FqPoly(2, {1, 1, 1}), s), Partition{2});
  EXPECT_EQ(factorization_type(FqPoly(2, {0, 0, 1}), s), (Partition{1, 1}));
  EXPECT_EQ(factorization_type(FqPoly(2, {0, 1, 0, 1}), s), (Partition{1, 1, 1}));
}

TEST(FactStats, EvenFactorizationExamples) {
  const IrreducibleSieve s(3, 4);
  EXPECT_EQ(even_factorization_type(FqPoly(3, {-1, 0, 1}), s), b_label({}, {1}));
  EXPECT_EQ(even_factorization_type(FqPoly(3, {-2, 0, 1}), s), b_label({1}, {}));
  EXPECT_EQ(even_factorization_type(FqPoly(3, {0, 0, 0, 0, 1}), s), b_label({}, {1, 1}));
  EXPECT_THROW(even_factorization_type(FqPoly(3, {0, 1, 1}), s), InputError);
  const IrreducibleSieve s2(2, 2);
  EXPECT_THROW(even_factorization_type(FqPoly(2, {1, 0, 1}), s2), InputError);
}

TEST(FactStats, IsEven) {
  EXPECT_TRUE(is_even(FqPoly(5, {2, 0, 3, 0, 1})));
  EXPECT_FALSE(is_even(FqPoly(5, {2, 1, 1})));
}

TEST(FactStats, FactorizationRemultipliesExhaustively) {
  for (int q : {2, 3}) {
    const IrreducibleSieve s(q, 4);
    for (int n = 1; n <= 4; ++n) {
      for (std::uint64_t c = 0; c < ipow(q, n); ++c) {
        const FqPoly f = FqPoly::monic_from_code(q, n, c);
        const auto fs = factor_monic(f, s);
        EXPECT_EQ(product(fs, q), f);
        for (const auto& g : fs) {
          EXPECT_TRUE(is_irreducible_naive(g));
          EXPECT_EQ(g, g.monic());
        }
        EXPECT_EQ(weight(factorization_type(f, s)), n);
      }
    }
  }
}

TEST(FactStats, SieveMatchesProductMarking) {
  for (int q : {2, 3, 5}) {
    const IrreducibleSieve s(q, 4);
    for (int d = 1; d <= (q == 5 ? 3 : 4); ++d) {
      std::set<std::uint64_t> sieve_codes;
      for (const auto& g : s.of_degree(d)) sieve_codes.insert(g.code());
      EXPECT_EQ(sieve_codes, irreducible_codes_by_marking(q, d)) << "q=" << q << " d=" << d;
    }
  }
}

TEST(FactStats, NecklaceMatchesSieve) {
  EXPECT_EQ(integer_mobius(1), 1);
  EXPECT_EQ(integer_mobius(4), 0);
  EXPECT_EQ(integer_mobius(6), 1);
  EXPECT_EQ(integer_mobius(7), -1);
  for (int q : {2, 3, 5}) {
    const IrreducibleSieve s(q, 4);
    for (int d = 1; d <= 4; ++d) {
      EXPECT_EQ(necklace_polynomial(d)(Rat(q)), Rat(static_cast<long>(s.of_degree(d).size())));
    }
  }
}

TEST(FactStats, CountByTypeExamples) {
  EXPECT_EQ(count_by_type(1, {1}), QPoly({Rat(0), Rat(1)}));
  EXPECT_EQ(count_by_type(2, {1, 1}), QPoly({Rat(0), Rat(1, 2), Rat(1, 2)}));
  EXPECT_EQ(count_by_type(2, {1, 1})(Rat(2)), Rat(3));
  EXPECT_EQ(count_by_type(2, {2})(Rat(2)), Rat(1));
  EXPECT_THROW(count_by_type(3, {1, 1}), InputError);
}

TEST(FactStats, CountByTypeSumsToAllMonics) {
  for (int n = 1; n <= 4; ++n) {
    for (int q : {2, 3}) {
      Rat total(0);
      for (const auto& p : partitions_of(n)) total += count_by_type(n, p)(Rat(q));
      EXPECT_EQ(total, Rat(static_cast<long>(ipow(q, n))));
    }
  }
}

TEST(FactStats, CountByTypeMatchesCensus) {
  for (int n = 1; n <= 4; ++n) {
    for (int q : {2, 3, 5}) {
      const Census c = factorization_census(Family::A, n, q);
      for (const auto& p : partitions_of(n)) {
        const auto it = c.find(a_label(p));
        const long got = it == c.end() ? 0 : static_cast<long>(it->second);
        EXPECT_EQ(count_by_type(n, p)(Rat(q)), Rat(got)) << to_string(p) << " q=" << q;
      }
    }
  }
}

TEST(FactStats, MurnaghanNakayamaExamples) {
  for (const auto& rho : partitions_of(4)) EXPECT_EQ(mn_character_value({4}, rho), Integer(1));
  EXPECT_EQ(mn_character_value({1, 1}, {2}), Integer(-1));
  EXPECT_EQ(mn_character_value({2, 1}, {1, 1, 1}), Integer(2));
  EXPECT_EQ(mn_character_value({2, 1}, {2, 1}), Integer(0));
  EXPECT_EQ(mn_character_value({2, 1}, {3}), Integer(-1));
}

// Trace of w on the standard representation: (fixed points of w) - 1.
TEST(FactStats, StandardCharacterByPermutationMatrices) {
  for (int n = 2; n <= 5; ++n) {
    const WeylGroup g(Family::A, n);
    Partition std_rep{n - 1, 1};
    for (const auto& w : g.elements()) {
      long fixed = 0;
      for (int i = 0; i < n; ++i) fixed += w.perm[static_cast<std::size_t>(i)] == i ? 1 : 0;
      EXPECT_EQ(mn_character_value(std_rep, class_label(g, w).lambda), Integer(fixed - 1));
    }
  }
}

TEST(FactStats, MurnaghanNakayamaOrthogonality) {
  for (int n = 1; n <= 4; ++n) {
    Rat sum_sq(0);
    const auto parts = partitions_of(n);
    for (const auto& l : parts) {
      const ClassFunction cl = sn_irreducible_character(l);
      const Rat d = cl(identity_label(Family::A, n));
      sum_sq += d * d;
      for (const auto& m : parts) {
        EXPECT_EQ(inner_product(cl, sn_irreducible_character(m)), Rat(l == m ? 1 : 0));
      }
    }
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(sum_sq, Rat(fact));
  }
}

TEST(FactStats, InnerProductExamples) {
  const ClassFunction t = trivial_character(Family::A, 3);
  EXPECT_EQ(inner_product(t, t), Rat(1));
  const ClassFunction s21 = sn_irreducible_character({2, 1});
  EXPECT_EQ(inner_product(s21, s21), Rat(1));
  EXPECT_EQ(inner_product(regular_character(Family::A, 3), s21), Rat(2));
  EXPECT_THROW(inner_product(t, trivial_character(Family::A, 2)), InputError);
  EXPECT_THROW(inner_product(t, trivial_character(Family::B, 3)), InputError);
}

TEST(FactStats, TypeBBuiltinsAreCharacters) {
  for (int n = 1; n <= 3; ++n) {
    const WeylGroup g(Family::B, n);
    const auto builtins = b_builtin_characters(n);
    ASSERT_EQ(builtins.size(), 5U);
    // Linear characters: orthonormal and multiplicative.
    for (std::size_t i = 0; i + 1 < builtins.size(); ++i) {
      for (std::size_t j = 0; j + 1 < builtins.size(); ++j) {
        if (n == 1 && i != j && (builtins[i].first == "sign_product" || builtins[j].first == "sign_product" ||
                                 builtins[i].first == "perm_sign" || builtins[j].first == "perm_sign")) {
          continue;  // B_1 has only two linear characters
        }
        EXPECT_EQ(inner_product(builtins[i].second, builtins[j].second), Rat(i == j ? 1 : 0))
            << builtins[i].first << " " << builtins[j].first;
      }
      for (const auto& u : g.elements()) {
        for (const auto& v : g.elements()) {
          const ClassFunction& chi = builtins[i].second;
          EXPECT_EQ(chi(class_label(g, compose(u, v))), chi(class_label(g, u)) * chi(class_label(g, v)));
        }
      }
    }
    // Permutation character on {+-1..+-n}: number of fixed signed points.
    for (const auto& w : g.elements()) {
      long fixed = 0;
      for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        fixed += (w.perm[k] == i && w.signs[k] == 1) ? 2 : 0;
      }
      EXPECT_EQ(builtins[4].second(class_label(g, w)), Rat(fixed));
    }
    // Determinant by direct computation of the signed permutation matrix.
    for (const auto& w : g.elements()) {
      std::vector<int> p = w.perm;
      int inversions = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
      int det = inversions % 2 == 0 ? 1 : -1;
      for (int s : w.signs) det *= s;
      EXPECT_EQ(b_det_character(n)(class_label(g, w)), Rat(det));
    }
  }
}

TEST(FactStats, ClassSizesSumToOrder) {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}}) {
    const WeylGroup g(f, n);
    std::uint64_t total = 0;
    for (const auto& [label, size] : class_sizes(g)) total += size;
    EXPECT_EQ(total, g.order());
  }
  EXPECT_EQ(class_sizes(WeylGroup(Family::A, 3)).at(a_label({2, 1})), 3U);
}

TEST(FactStats, EvenFactorizationEqualsFrobeniusClass) {
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
        EXPECT_EQ(frobenius_class(g, *l.field, l.y), even_factorization_type(f, s)) << f.to_string();
      }
    }
  }
}

TEST(FactStats, LiftRootsReproducePolynomial) {
  const int q = 3;
  const IrreducibleSieve s(q, 4);
  RootFinder rf(s);
  for (std::uint64_t c = 0; c < ipow(q, 4); ++c) {
    const FqPoly f = FqPoly::monic_from_code(q, 4, c);
    const OrbitLift l = rf.lift(Family::A, f);
    ASSERT_EQ(l.y.size(), 4U);
    for (const auto& y : l.y) EXPECT_EQ(l.field->evaluate(f, y), l.field->zero());
  }
}

}  // namespace
}  // namespace hyparr
