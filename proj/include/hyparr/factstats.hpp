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
#include <utility>
#include <vector>

#include "hyparr/finite_field.hpp"
#include "hyparr/partition.hpp"
#include "hyparr/qpoly.hpp"

namespace hyparr {

// Monic irreducibles over F_q of each degree up to max_degree, in code order.
class IrreducibleSieve {
 public:
  IrreducibleSieve(int q, int max_degree);

  int q() const { return q_; }
  int max_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
  const std::vector<FqPoly>& of_degree(int d) const;
  // Membership for degree <= max_degree; throws InputError above it.
  bool contains(const FqPoly& f) const;

 private:
  int q_;
  std::vector<std::vector<FqPoly>> by_degree_;
};

// Irreducible monic factors with multiplicity, sorted. Requires the sieve to
// reach at least floor(deg f / 2).
std::vector<FqPoly> factor_monic(const FqPoly& f, const IrreducibleSieve& sieve);
Partition factorization_type(const FqPoly& f, const IrreducibleSieve& sieve);

bool is_even(const FqPoly& f);
// Double partition of an even monic f of degree 2n over odd q. An even
// irreducible factor of degree 2i and multiplicity m adds (m mod 2) parts i
// to lambda and floor(m/2) parts 2i to mu; a pair h(t), h(-t) of degree j
// and multiplicity m adds m parts j to mu; t^{2m} adds m parts 1 to mu.
ConjClassLabel even_factorization_type(const FqPoly& f, const IrreducibleSieve& sieve);

int integer_mobius(int n);
// (1/d) sum_{e | d} mu(e) q^{d/e}.
QPoly necklace_polynomial(int d);
// Number of monic degree-n polynomials of factorization type lambda.
QPoly count_by_type(int n, const Partition& lambda);

// Orbit representative of the roots of f in a splitting field F_{q^k}.
struct OrbitLift {
  const ExtField* field;
  std::vector<ExtField::Elem> y;
};

// Caches extension fields and the roots of each irreducible.
class RootFinder {
 public:
  explicit RootFinder(const IrreducibleSieve& sieve) : sieve_(&sieve) {}

  const ExtField& field(int k);
  // Roots of an irreducible in F_{q^k}; deg g must divide k.
  const std::vector<ExtField::Elem>& roots(const FqPoly& g, int k);
  // Type A: the roots of f with multiplicity; type B: f even of degree 2n
  // and y with f = prod (t^2 - y_i^2).
  OrbitLift lift(Family family, const FqPoly& f);

 private:
  const IrreducibleSieve* sieve_;
  std::map<int, ExtField> fields_;
  std::map<std::pair<int, std::vector<int>>, std::vector<ExtField::Elem>> roots_;
};

}  // namespace hyparr
