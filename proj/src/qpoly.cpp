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

#include "hyparr/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "hyparr/error.hpp"

namespace hyparr {

QPoly::QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rat& c) { return QPoly({c}); }

QPoly QPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1, Rat(0));
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat QPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat QPoly::operator()(const Rat& q) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + o * Rat(-1); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& c) const {
  std::vector<Rat> v = coeffs_;
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rat mag = abs(c);
    if (i == 0 || mag != 1) os << hyparr::to_string(mag);
    if (i > 0) os << (mag != 1 ? "*" : "") << "q";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

QPoly poly_interpolate(std::span<const InterpolationNode> nodes, int degree_bound) {
  if (degree_bound < 0) throw InputError("poly_interpolate: negative degree bound");
  const auto needed = static_cast<std::size_t>(degree_bound) + 1;
  if (nodes.size() < needed) {
    throw InputError("poly_interpolate: need " + std::to_string(needed) +
                     " nodes, got " + std::to_string(nodes.size()));
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].x == nodes[j].x) {
        throw InputError("poly_interpolate: duplicate node " + hyparr::to_string(nodes[i].x));
      }
    }
  }
  QPoly result;
  for (std::size_t i = 0; i < needed; ++i) {
    QPoly basis = QPoly::constant(1);
    Rat denom = 1;
    for (std::size_t j = 0; j < needed; ++j) {
      if (j == i) continue;
      basis = basis * QPoly({-nodes[j].x, Rat(1)});
      denom *= nodes[i].x - nodes[j].x;
    }
    result = result + basis * (nodes[i].y / denom);
  }
  for (std::size_t i = needed; i < nodes.size(); ++i) {
    const Rat v = result(nodes[i].x);
    if (v != nodes[i].y) {
      throw VerificationFailure("poly_interpolate: node x=" + hyparr::to_string(nodes[i].x) +
                                " has value " + hyparr::to_string(nodes[i].y) +
                                " but the degree-" + std::to_string(degree_bound) +
                                " interpolant gives " + hyparr::to_string(v));
    }
  }
  return result;
}

}  // namespace hyparr
