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

#include "hyparr/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace hyparr {

namespace {

class Tableau {
 public:
  Tableau(const QMat& a, const QVec& b, const QVec& c)
      : m_(a.rows()), n_(a.cols()), d_(m_ + 2, n_ + 2), basis_(m_), nonbasis_(n_ + 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) d_(i, j) = a(i, j);
      d_(i, n_) = -1;
      d_(i, n_ + 1) = b[i];
      basis_[i] = static_cast<long>(n_ + i);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      nonbasis_[j] = static_cast<long>(j);
      d_(m_, j) = -c[j];
    }
    nonbasis_[n_] = -1;
    d_(m_ + 1, n_) = 1;
  }

  LpResult solve() {
    LpResult res;
    std::size_t r = 0;
    for (std::size_t i = 1; i < m_; ++i) {
      if (d_(i, n_ + 1) < d_(r, n_ + 1)) r = i;
    }
    if (m_ > 0 && d_(r, n_ + 1) < 0) {
      pivot(r, n_);
      if (!run(true) || d_(m_ + 1, n_ + 1) < 0) {
        res.status = LpStatus::kInfeasible;
        return res;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] != -1) continue;
        std::size_t s = n_ + 1;
        for (std::size_t j = 0; j <= n_; ++j) {
          if (d_(i, j) == 0) continue;
          if (s == n_ + 1 || nonbasis_[j] < nonbasis_[s]) s = j;
        }
        if (s <= n_) pivot(i, s);
      }
    }
    if (!run(false)) {
      res.status = LpStatus::kUnbounded;
      return res;
    }
    res.status = LpStatus::kOptimal;
    res.x.assign(n_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n_) {
        res.x[static_cast<std::size_t>(basis_[i])] = d_(i, n_ + 1);
      }
    }
    res.value = d_(m_, n_ + 1);
    return res;
  }

 private:
  void pivot(std::size_t r, std::size_t s) {
    const Rat inv = 1 / d_(r, s);
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r || d_(i, s) == 0) continue;
      const Rat f = d_(i, s) * inv;
      for (std::size_t j = 0; j < n_ + 2; ++j) {
        if (j != s) d_(i, j) -= d_(r, j) * f;
      }
      d_(i, s) = -f;
    }
    for (std::size_t j = 0; j < n_ + 2; ++j) {
      if (j != s) d_(r, j) *= inv;
    }
    d_(r, s) = inv;
    std::swap(basis_[r], nonbasis_[s]);
  }

  // Bland's rule: smallest-index entering column with negative reduced cost,
  // smallest-index leaving row among ratio-test ties.
  bool run(bool phase_one) {
    const std::size_t obj = phase_one ? m_ + 1 : m_;
    for (;;) {
      std::size_t s = n_ + 1;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (!phase_one && nonbasis_[j] == -1) continue;
        if (d_(obj, j) < 0 && (s == n_ + 1 || nonbasis_[j] < nonbasis_[s])) s = j;
      }
      if (s == n_ + 1) return true;
      std::size_t r = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (d_(i, s) <= 0) continue;
        const Rat ratio = d_(i, n_ + 1) / d_(i, s);
        if (r == m_ || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == m_) return false;
      pivot(r, s);
    }
  }

  std::size_t m_;
  std::size_t n_;
  QMat d_;
  std::vector<long> basis_;
  std::vector<long> nonbasis_;
};

bool strictly_feasible(std::span<const StrictHalfspace> constraints, const QVec& x) {
  for (const auto& h : constraints) {
    const Rat v = dot(*h.normal, x) - *h.offset;
    if (h.sign * sgn(v) <= 0) return false;
  }
  return true;
}

// Round each coordinate to the nearest multiple of 2^-k for increasing k,
// returning the first strictly feasible candidate.
QVec simplify_witness(std::span<const StrictHalfspace> constraints, const QVec& x) {
  for (int k = 0; k <= 40; ++k) {
    const Integer scale = Integer(1) << k;
    QVec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      Rat scaled = x[i] * scale + Rat(1, 2);
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      y[i] = Rat(fl, scale);
      y[i].canonicalize();
    }
    if (strictly_feasible(constraints, y)) return y;
  }
  return x;
}

}  // namespace

LpResult lp_maximize(const QMat& a, const QVec& b, const QVec& c) {
  if (b.size() != a.rows() || c.size() != a.cols()) {
    throw std::invalid_argument("lp_maximize: shape mismatch");
  }
  Tableau t(a, b, c);
  return t.solve();
}

std::optional<QVec> strict_feasible_point(std::span<const StrictHalfspace> constraints,
                                          int dim) {
  const auto n = static_cast<std::size_t>(dim);
  if (constraints.empty()) return QVec(n, Rat(0));
  // Variables: u (n), v (n) with x = u - v, and s >= 0 with t = 1 - s.
  // sign*(a.x - b) >= 1 - s  <=>  -sign*a.(u - v) - s <= -sign*b - 1.
  const std::size_t vars = 2 * n + 1;
  QMat a(0, vars);
  QVec rhs;
  for (const auto& h : constraints) {
    QVec row(vars, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = -h.sign * (*h.normal)[i];
      row[n + i] = h.sign * (*h.normal)[i];
    }
    row[2 * n] = -1;
    a.append_row(row);
    rhs.push_back(-h.sign * *h.offset - 1);
  }
  QVec c(vars, Rat(0));
  c[2 * n] = -1;
  const LpResult res = lp_maximize(a, rhs, c);
  if (res.status != LpStatus::kOptimal) {
    throw std::logic_error("strict_feasible_point: slack LP not optimal");
  }
  // value = -s*, so t* = 1 + value.
  if (1 + res.value <= 0) return std::nullopt;
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = res.x[i] - res.x[n + i];
  if (!strictly_feasible(constraints, x)) {
    throw std::logic_error("strict_feasible_point: LP optimum is not interior");
  }
  return simplify_witness(constraints, x);
}

}  // namespace hyparr
