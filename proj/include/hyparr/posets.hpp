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
#include <string>
#include <utility>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

// Dense relation on {0..n-1}; set(i, j) records i <= j.
class PartialOrder {
 public:
  explicit PartialOrder(int n = 0);

  int size() const { return n_; }
  void set(int i, int j);
  bool leq(int i, int j) const;

  // Reflexive, antisymmetric and transitive.
  bool is_partial_order() const;
  // Pairs (i, j) with i < j and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
  // Euler characteristic of the order complex (simplices = nonempty chains).
  Integer order_complex_euler_characteristic() const;

 private:
  const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

PartialOrder flats_order(const FlatsPoset& flats);

// Chambers of the subarrangement `subset` as sign vectors over the whole
// arrangement, zero outside `subset`.
std::vector<SignVector> subarrangement_chamber_signs(const Arrangement& a, HyperplaneSet subset);

// (K, C) with K a flat and C a chamber of Supp(K).
struct StratElement {
  int flat;
  SignVector chamber;
};

struct StratPoset {
  std::vector<StratElement> elements;
  PartialOrder order;
};

// Throws std::logic_error if the constructed relation is not a partial order.
StratPoset build_strat_poset(const Arrangement& a, const FlatsPoset& flats);

// A face: a chamber of the arrangement induced on flat K by the hyperplanes
// not containing K. `signs` is its sign vector over the whole arrangement.
struct Face {
  int flat;
  SignVector signs;
  QVec witness;
};

std::vector<Face> enumerate_faces(const Arrangement& a, const FlatsPoset& flats);
// F <= G iff the closure of F contains G.
bool face_leq(const Face& f, const Face& g);

struct SalvettiElement {
  int face;
  SignVector chamber;  // chamber of Supp(face)
};

struct SalvettiPoset {
  std::vector<Face> faces;
  std::vector<SalvettiElement> elements;
  PartialOrder order;
};

SalvettiPoset build_salvetti_poset(const Arrangement& a, const FlatsPoset& flats);

// Graphviz digraph, one node per element, edges along covering relations
// from smaller to larger.
std::string to_dot(const std::string& name, const std::vector<std::string>& labels,
                   const PartialOrder& order);

}  // namespace hyparr
