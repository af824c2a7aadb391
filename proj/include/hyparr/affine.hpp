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

#include <string>
#include <vector>

#include "hyparr/linalg.hpp"
#include "hyparr/rational.hpp"

namespace hyparr {

// x = origin + sum_k t_k * directions[k]
struct Parametrization {
  QVec origin;
  std::vector<QVec> directions;

  QVec at(std::span<const Rat> t) const;
};

// Solution set of a rational linear system in a fixed ambient dimension.
//
// The system is stored in canonical form: reduced row echelon form over the
// variable columns, then each row scaled to a primitive integer vector with a
// positive pivot. Two subspaces are equal iff their representations are
// equal. An inconsistent system is the distinguished EMPTY subspace.
class AffineSubspace {
 public:
  static AffineSubspace ambient(int n);
  static AffineSubspace empty_set(int n);
  static AffineSubspace point(const QVec& p);
  static AffineSubspace hyperplane(const QVec& normal, const Rat& offset);
  // Equations rows(A) . x = b.
  static AffineSubspace from_equations(const QMat& a, const QVec& b);

  int ambient_dim() const { return n_; }
  bool is_empty() const { return empty_; }
  // Throws std::logic_error on the EMPTY subspace.
  int dim() const;
  int codim() const { return n_ - dim(); }

  // Canonical equation rows (integral) and right-hand sides.
  const QMat& equations() const { return eqs_; }
  const QVec& rhs() const { return rhs_; }

  bool contains_point(std::span<const Rat> x) const;
  Parametrization parametrize() const;

  std::string to_string() const;

  bool operator==(const AffineSubspace& other) const = default;
  // Arbitrary but fixed total order on representations, for use as map keys.
  bool operator<(const AffineSubspace& other) const;

 private:
  AffineSubspace(int n, bool empty) : n_(n), empty_(empty), eqs_(0, n) {}
  void canonicalize();
  void require_nonempty(const char* what) const;

  int n_ = 0;
  bool empty_ = false;
  QMat eqs_;
  QVec rhs_;
};

// Throws InputError on ambient-dimension mismatch.
AffineSubspace affine_intersect(const AffineSubspace& s1, const AffineSubspace& s2);

// True iff s2 is a subset of s1. Throws InputError if either is EMPTY or the
// dimensions disagree.
bool affine_contains(const AffineSubspace& s1, const AffineSubspace& s2);

}  // namespace hyparr
