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
#include <string>

#include "hyparr/partition.hpp"
#include "hyparr/rational.hpp"
#include "hyparr/weyl.hpp"

namespace hyparr {

// Rational-valued function on the conjugacy classes of A_n or B_n.
struct ClassFunction {
  Family family = Family::A;
  int n = 0;
  std::map<ConjClassLabel, Rat> values;

  // Throws InputError on a foreign or missing label.
  const Rat& operator()(const ConjClassLabel& c) const;
  // Every label of the group present, no others.
  void validate() const;

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const Rat& c) const;
  bool operator==(const ClassFunction& o) const = default;
};

ClassFunction zero_class_function(Family f, int n);
ClassFunction trivial_character(Family f, int n);
ClassFunction regular_character(Family f, int n);
ClassFunction indicator(Family f, int n, const ConjClassLabel& c);

// Murnaghan-Nakayama value chi^lambda(rho).
Integer mn_character_value(const Partition& lambda, const Partition& rho);
ClassFunction sn_irreducible_character(const Partition& lambda);

// Linear characters of B_n and the permutation character on {+-1, .., +-n}.
ClassFunction b_sign_product_character(int n);   // product of the signs
ClassFunction b_perm_sign_character(int n);      // sign of the underlying permutation
ClassFunction b_det_character(int n);            // determinant ("sign" of B_n)
ClassFunction b_permutation_character(int n);
// The four linear characters followed by the permutation character.
std::vector<std::pair<std::string, ClassFunction>> b_builtin_characters(int n);

// Sizes of the conjugacy classes, by enumeration of the group.
std::map<ConjClassLabel, std::uint64_t> class_sizes(const WeylGroup& g);
// (1/|W|) sum_w chi(w) psi(w). Throws InputError on group mismatch.
Rat inner_product(const ClassFunction& chi, const ClassFunction& psi);

}  // namespace hyparr
