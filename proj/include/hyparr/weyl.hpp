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

#include <compare>
#include <span>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/finite_field.hpp"
#include "hyparr/partition.hpp"
#include "hyparr/qpoly.hpp"

namespace hyparr {

// Signed permutation acting by (w.x)_i = signs_i * x_{perm^-1(i)}; perm is
// 0-based with perm[j] the image of j.
struct GroupElement {
  std::vector<int> perm;
  std::vector<int> signs;

  int n() const { return static_cast<int>(perm.size()); }
  auto operator<=>(const GroupElement&) const = default;
  bool operator==(const GroupElement&) const = default;
};

GroupElement identity_element(int n);
// Function composition: (w o v).x = w.(v.x).
GroupElement compose(const GroupElement& w, const GroupElement& v);
GroupElement inverse(const GroupElement& w);
QVec act(const GroupElement& w, std::span<const Rat> x);
std::vector<ExtField::Elem> act(const ExtField& f, const GroupElement& w, const std::vector<ExtField::Elem>& y);
std::string to_string(const GroupElement& w);

class WeylGroup {
 public:
  // Type A_n is S_n on n coordinates; type B_n the signed permutations.
  WeylGroup(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  // Throws InputError if w is not in the group.
  void require_member(const GroupElement& w) const;

  // Exponents m_i: 0..n-1 for A (one zero from the diagonal), 1,3,..,2n-1 for B.
  std::vector<int> exponents() const;

 private:
  Family family_;
  int n_;
  std::vector<GroupElement> elements_;
};

Arrangement reflection_arrangement(const WeylGroup& w);
// x_1 > ... > x_n for A, x_1 > ... > x_n > 0 for B, with witness (n, ..., 1).
Chamber default_base_chamber(const WeylGroup& w, const Arrangement& a);

ConjClassLabel class_label(const WeylGroup& g, const GroupElement& w);
AffineSubspace fix_subspace(const GroupElement& w);
// Sum over w of q^{codim Fix(w)}.
QPoly inertia_polynomial(const WeylGroup& g);
// prod_i (1 + m_i q) over the nonzero exponents.
QPoly exponent_product(const WeylGroup& g);

// The unique u in `coset` with u.C0 and C0 on the same side of every
// hyperplane in `supp`. Throws InputError if zero or several qualify.
GroupElement minimal_representative(const Arrangement& a, const std::vector<GroupElement>& coset,
                                    HyperplaneSet supp, const Chamber& c0);

// Hyperplanes of `a` (integer normals) vanishing at y.
HyperplaneSet support_over(const ExtField& f, const Arrangement& a, const std::vector<ExtField::Elem>& y);

// Class of the minimal representative of {w : w.y = Frob(y)}. Re-runs with a
// second lift of the orbit and throws std::logic_error on disagreement;
// throws InputError if Frobenius does not preserve the orbit.
ConjClassLabel frobenius_class(const WeylGroup& g, const ExtField& f, const std::vector<ExtField::Elem>& y);

}  // namespace hyparr
