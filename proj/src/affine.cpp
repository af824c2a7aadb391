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

#include "hyparr/affine.hpp"

#include <sstream>
#include <stdexcept>

#include "hyparr/error.hpp"

namespace hyparr {

QVec Parametrization::at(std::span<const Rat> t) const {
  QVec x = origin;
  for (std::size_t k = 0; k < directions.size(); ++k) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += t[k] * directions[k][i];
  }
  return x;
}

AffineSubspace AffineSubspace::ambient(int n) {
  if (n < 0) throw InputError("negative ambient dimension");
  AffineSubspace s(n, false);
  return s;
}

AffineSubspace AffineSubspace::empty_set(int n) {
  AffineSubspace s(n, true);
  return s;
}

AffineSubspace AffineSubspace::point(const QVec& p) {
  const auto n = p.size();
  return from_equations(QMat::identity(n), p);
}

AffineSubspace AffineSubspace::hyperplane(const QVec& normal, const Rat& offset) {
  QMat a(0, normal.size());
  a.append_row(normal);
  return from_equations(a, QVec{offset});
}

AffineSubspace AffineSubspace::from_equations(const QMat& a, const QVec& b) {
  if (a.rows() != b.size()) {
    throw InputError("from_equations: row count and rhs length differ");
  }
  AffineSubspace s(static_cast<int>(a.cols()), false);
  s.eqs_ = a;
  s.rhs_ = b;
  s.canonicalize();
  return s;
}

void AffineSubspace::canonicalize() {
  if (empty_) {
    eqs_ = QMat(0, n_);
    rhs_.clear();
    return;
  }
  const auto n = static_cast<std::size_t>(n_);
  QMat aug(eqs_.rows(), n + 1);
  for (std::size_t r = 0; r < eqs_.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = eqs_(r, c);
    aug(r, n) = rhs_[r];
  }
  const auto pivots = rref_in_place(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug(r, n) != 0) {
      empty_ = true;
      eqs_ = QMat(0, n);
      rhs_.clear();
      return;
    }
  }
  aug.truncate_rows(pivots.size());
  eqs_ = QMat(0, n);
  rhs_.clear();
  for (std::size_t r = 0; r < aug.rows(); ++r) {
    QVec row(aug.row(r).begin(), aug.row(r).end());
    const Integer m = denominator_lcm(row);
    for (auto& x : row) x *= m;
    const Integer g = content(row);
    for (auto& x : row) x /= g;
    // The pivot is already positive after RREF and positive scaling.
    rhs_.push_back(row.back());
    row.pop_back();
    eqs_.append_row(row);
  }
}

void AffineSubspace::require_nonempty(const char* what) const {
  if (empty_) throw std::logic_error(std::string(what) + ": EMPTY subspace");
}

int AffineSubspace::dim() const {
  require_nonempty("dim");
  return n_ - static_cast<int>(eqs_.rows());
}

bool AffineSubspace::contains_point(std::span<const Rat> x) const {
  if (static_cast<int>(x.size()) != n_) {
    throw InputError("contains_point: dimension mismatch");
  }
  if (empty_) return false;
  for (std::size_t r = 0; r < eqs_.rows(); ++r) {
    if (dot(eqs_.row(r), x) != rhs_[r]) return false;
  }
  return true;
}

Parametrization AffineSubspace::parametrize() const {
  require_nonempty("parametrize");
  const auto n = static_cast<std::size_t>(n_);
  std::vector<int> pivot_row(n, -1);
  std::vector<std::size_t> pivot_col(eqs_.rows());
  for (std::size_t r = 0; r < eqs_.rows(); ++r) {
    std::size_t c = 0;
    while (eqs_(r, c) == 0) ++c;
    pivot_row[c] = static_cast<int>(r);
    pivot_col[r] = c;
  }
  Parametrization p;
  p.origin.assign(n, Rat(0));
  for (std::size_t r = 0; r < eqs_.rows(); ++r) {
    p.origin[pivot_col[r]] = rhs_[r] / eqs_(r, pivot_col[r]);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_row[f] >= 0) continue;
    QVec d(n, Rat(0));
    d[f] = 1;
    for (std::size_t r = 0; r < eqs_.rows(); ++r) {
      d[pivot_col[r]] = -eqs_(r, f) / eqs_(r, pivot_col[r]);
    }
    p.directions.push_back(std::move(d));
  }
  return p;
}

std::string AffineSubspace::to_string() const {
  if (empty_) return "EMPTY";
  if (eqs_.rows() == 0) return "R^" + std::to_string(n_);
  std::ostringstream os;
  for (std::size_t r = 0; r < eqs_.rows(); ++r) {
    if (r) os << ", ";
    bool first = true;
    for (std::size_t c = 0; c < eqs_.cols(); ++c) {
      const Rat& a = eqs_(r, c);
      if (a == 0) continue;
      if (!first) os << (a > 0 ? " + " : " - ");
      else if (a < 0) os << "-";
      const Rat mag = abs(a);
      if (mag != 1) os << hyparr::to_string(mag) << "*";
      os << "x" << (c + 1);
      first = false;
    }
    os << " = " << hyparr::to_string(rhs_[r]);
  }
  return os.str();
}

bool AffineSubspace::operator<(const AffineSubspace& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  if (empty_ != other.empty_) return empty_ < other.empty_;
  if (eqs_.rows() != other.eqs_.rows()) return eqs_.rows() < other.eqs_.rows();
  for (std::size_t r = 0; r < eqs_.rows(); ++r) {
    for (std::size_t c = 0; c < eqs_.cols(); ++c) {
      const int cmp_val = cmp(eqs_(r, c), other.eqs_(r, c));
      if (cmp_val != 0) return cmp_val < 0;
    }
    const int cmp_val = cmp(rhs_[r], other.rhs_[r]);
    if (cmp_val != 0) return cmp_val < 0;
  }
  return false;
}

AffineSubspace affine_intersect(const AffineSubspace& s1, const AffineSubspace& s2) {
  if (s1.ambient_dim() != s2.ambient_dim()) {
    throw InputError("affine_intersect: ambient dimension mismatch");
  }
  if (s1.is_empty()) return s1;
  if (s2.is_empty()) return s2;
  QMat a = s1.equations();
  QVec b = s1.rhs();
  for (std::size_t r = 0; r < s2.equations().rows(); ++r) {
    a.append_row(s2.equations().row(r));
    b.push_back(s2.rhs()[r]);
  }
  return AffineSubspace::from_equations(a, b);
}

bool affine_contains(const AffineSubspace& s1, const AffineSubspace& s2) {
  if (s1.ambient_dim() != s2.ambient_dim()) {
    throw InputError("affine_contains: ambient dimension mismatch");
  }
  if (s1.is_empty() || s2.is_empty()) {
    throw InputError("affine_contains: EMPTY input");
  }
  const Parametrization p = s2.parametrize();
  for (std::size_t r = 0; r < s1.equations().rows(); ++r) {
    const auto eq = s1.equations().row(r);
    if (dot(eq, p.origin) != s1.rhs()[r]) return false;
    for (const auto& d : p.directions) {
      if (dot(eq, d) != 0) return false;
    }
  }
  return true;
}

}  // namespace hyparr
