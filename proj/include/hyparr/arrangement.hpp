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
#include <span>
#include <string>
#include <vector>

#include "hyparr/affine.hpp"
#include "hyparr/rational.hpp"

namespace hyparr {

enum class Sign : std::int8_t { kNeg = -1, kZero = 0, kPos = 1 };
using SignVector = std::vector<Sign>;

char sign_char(Sign s);
std::string to_string(const SignVector& v);

// Bit i set iff hyperplane i belongs to the set. Arrangements are limited to
// 64 hyperplanes, far beyond what the exponential enumerations here reach.
using HyperplaneSet = std::uint64_t;
inline constexpr int kMaxHyperplanes = 64;

inline bool contains(HyperplaneSet s, int i) { return (s >> i) & 1U; }
inline HyperplaneSet singleton(int i) { return HyperplaneSet{1} << i; }
std::vector<int> members(HyperplaneSet s);

// normal . x = offset, normalized: integral entries with gcd 1 over the
// whole (normal, offset) vector and the first nonzero normal entry positive.
struct Hyperplane {
  QVec normal;
  Rat offset;

  // Throws InputError on a zero normal.
  static Hyperplane normalized(QVec normal, Rat offset);

  Rat evaluate(std::span<const Rat> x) const { return dot(normal, x) - offset; }
  Sign side(std::span<const Rat> x) const;
  AffineSubspace subspace() const { return AffineSubspace::hyperplane(normal, offset); }

  bool operator==(const Hyperplane& o) const = default;
};

class Arrangement {
 public:
  // Normalizes every hyperplane; throws InputError on dimension mismatch or
  // when two inputs normalize to the same hyperplane (naming both indices).
  Arrangement(int dim, std::vector<Hyperplane> hyperplanes);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hyperplanes_.size()); }
  const Hyperplane& hyperplane(int i) const { return hyperplanes_[static_cast<std::size_t>(i)]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  HyperplaneSet all() const;

  // The hyperplanes in `subset`, in their original relative order.
  Arrangement subarrangement(HyperplaneSet subset) const;

  SignVector signs_at(std::span<const Rat> x) const;

 private:
  int dim_;
  std::vector<Hyperplane> hyperplanes_;
};

Arrangement braid_arrangement(int n);    // x_i = x_j, i < j
Arrangement type_b_arrangement(int n);   // x_i = x_j, x_i = -x_j (i < j); x_i = 0
Arrangement boolean_arrangement(int n);  // x_i = 0
// Seeded random integer arrangement with coefficients in [-3, 3], dimension
// in [1, max_dim] and between 1 and max_hyperplanes distinct hyperplanes.
Arrangement random_arrangement(std::uint64_t seed, int max_dim, int max_hyperplanes);

struct Chamber {
  SignVector signs;  // no zero entries
  QVec witness;      // strictly inside
};

// All chambers, sorted by sign vector (with - before +); the position in the
// returned list is the chamber id used everywhere else.
std::vector<Chamber> enumerate_chambers(const Arrangement& a);

// Indices where the sign vectors differ. Throws InputError on length mismatch.
HyperplaneSet separating_set(const Arrangement& a, const Chamber& c, const Chamber& d);
HyperplaneSet separating_set(const SignVector& c, const SignVector& d);

struct Flat {
  AffineSubspace subspace;
  HyperplaneSet supp;
};

// Intersection poset L(A) under reverse inclusion. Flat 0 is the ambient
// space; flats are sorted by codimension, then by canonical form.
struct FlatsPoset {
  std::vector<Flat> flats;
  std::vector<Integer> mobius;
  // meet[k][h]: index of flats[k] intersected with hyperplane h, -1 if empty.
  std::vector<std::vector<int>> meet;

  int size() const { return static_cast<int>(flats.size()); }
  // K <= L in L(A), i.e. K contains L.
  bool leq(int k, int l) const { return (flats[k].supp & ~flats[l].supp) == 0; }
  // -1 if the subspace is not a flat.
  int index_of(const AffineSubspace& s) const;
};

FlatsPoset enumerate_flats(const Arrangement& a);

// Hyperplanes vanishing identically on the input. Throws InputError on
// dimension mismatch or an EMPTY subspace.
HyperplaneSet support(const Arrangement& a, std::span<const Rat> point);
HyperplaneSet support(const Arrangement& a, const AffineSubspace& s);

// Chamber counts of subarrangements, memoized by hyperplane subset.
class ChamberCounter {
 public:
  explicit ChamberCounter(const Arrangement& a) : arrangement_(&a) {}
  std::size_t count(HyperplaneSet subset);

 private:
  const Arrangement* arrangement_;
  std::map<HyperplaneSet, std::size_t> cache_;
};

// |X_A(F_q)|: sum over y in F_q^n of the number of chambers of the real
// subarrangement of hyperplanes whose normalized integer equation holds at y
// modulo q. Throws InputError if q is not prime or q divides every entry of
// some normal (the reduction of that hyperplane is not a hyperplane).
std::uint64_t count_points_XA(const Arrangement& a, int q);

bool is_prime(long n);

}  // namespace hyparr
