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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

// Univariate polynomial in q with rational coefficients; coeffs()[i] is the
// coefficient of q^i. The leading coefficient is nonzero unless the
// polynomial is zero, which has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  static QPoly constant(const Rat& c);
  static QPoly monomial(const Rat& c, int degree);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coefficient(int i) const;

  Rat operator()(const Rat& q) const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& c) const;

  bool operator==(const QPoly& o) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct InterpolationNode {
  Rat x;
  Rat y;
};

// Lagrange interpolation through the first degree_bound+1 nodes. Remaining
// nodes are checked against the result. Throws InputError on duplicate
// abscissae or too few nodes, VerificationFailure if an extra node is off the
// interpolant.
QPoly poly_interpolate(std::span<const InterpolationNode> nodes, int degree_bound);

}  // namespace hyparr
