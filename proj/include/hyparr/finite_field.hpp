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

namespace hyparr {

// Arithmetic in the prime field F_q.
int mod_q(long long a, int q);
int inv_mod(int a, int q);
int pow_mod(long long a, long long e, int q);

// Polynomial over F_q, coefficients from the constant term up, trimmed.
class FqPoly {
 public:
  FqPoly() = default;
  FqPoly(int q, std::vector<int> coeffs);

  static FqPoly constant(int q, int c) { return FqPoly(q, {c}); }
  static FqPoly variable(int q) { return FqPoly(q, {0, 1}); }
  // Monic of the given degree whose lower coefficients are the base-q digits
  // of `code` (constant term least significant).
  static FqPoly monic_from_code(int q, int degree, std::uint64_t code);

  int q() const { return q_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  int coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0; }
  const std::vector<int>& coeffs() const { return c_; }
  // Inverse of monic_from_code.
  std::uint64_t code() const;

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly scaled(int c) const;
  // Throws std::invalid_argument on division by zero.
  static std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
  FqPoly monic() const;
  // f(-t).
  FqPoly negated_variable() const;
  int evaluate(int x) const;

  bool operator==(const FqPoly& o) const = default;
  // Degree first, then code.
  bool operator<(const FqPoly& o) const;
  std::string to_string() const;

 private:
  void trim();
  int q_ = 2;
  std::vector<int> c_;
};

// Brute-force irreducibility: no monic factor of degree <= deg/2.
bool is_irreducible_naive(const FqPoly& f);

// F_{q^k} = F_q[t]/(m), m the least irreducible of degree k in code order.
// Elements are coefficient vectors of length k.
class ExtField {
 public:
  using Elem = std::vector<int>;

  ExtField(int q, int k);

  int q() const { return q_; }
  int degree() const { return k_; }
  const FqPoly& modulus() const { return modulus_; }
  std::uint64_t size() const { return size_; }

  Elem zero() const { return Elem(static_cast<std::size_t>(k_), 0); }
  Elem from_base(int c) const;
  Elem element(std::uint64_t code) const;
  std::uint64_t encode(const Elem& e) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(const Elem& a) const { return pow(a, static_cast<std::uint64_t>(q_)); }
  // Evaluates a polynomial over the base field.
  Elem evaluate(const FqPoly& f, const Elem& x) const;
  std::string to_string(const Elem& a) const;

 private:
  int q_;
  int k_;
  FqPoly modulus_;
  std::uint64_t size_;
};

}  // namespace hyparr
