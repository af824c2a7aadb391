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

#include "hyparr/validorder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "hyparr/error.hpp"

namespace hyparr {

std::vector<AffineSubspace> UnionOfFlats::maximal_flats(const FlatsPoset& flats) const {
  std::vector<AffineSubspace> out;
  out.reserve(flat_ids.size());
  for (int id : flat_ids) out.push_back(flats.flats[static_cast<std::size_t>(id)].subspace);
  return out;
}

ArrangementData::ArrangementData(Arrangement arrangement)
    : a(std::move(arrangement)), chambers(enumerate_chambers(a)), flats(enumerate_flats(a)) {}

namespace {

void require_permutation(const ArrangementData& d, const std::vector<int>& order) {
  const std::size_t n = d.chambers.size();
  if (order.size() != n) throw InputError("order must list every chamber exactly once");
  std::vector<bool> seen(n, false);
  for (int c : order) {
    if (c < 0 || static_cast<std::size_t>(c) >= n || seen[static_cast<std::size_t>(c)]) {
      throw InputError("order is not a permutation of the chamber ids");
    }
    seen[static_cast<std::size_t>(c)] = true;
  }
}

// Intersect the union with the union of the hyperplanes in `sep`.
std::vector<int> intersect_with(const FlatsPoset& flats, const std::vector<int>& current, HyperplaneSet sep) {
  std::vector<int> next;
  for (int k : current) {
    for (int h : members(sep)) {
      const int m = flats.meet[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)];
      if (m >= 0) next.push_back(m);
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  std::vector<int> maximal;
  for (int k : next) {
    bool dominated = false;
    for (int l : next) {
      if (l != k && flats.leq(l, k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(k);
  }
  return maximal;
}

UnionOfFlats star_set(const ArrangementData& d, const std::vector<int>& order, std::size_t i) {
  std::vector<int> current{0};
  const SignVector& ci = d.chambers[static_cast<std::size_t>(order[i])].signs;
  for (std::size_t j = 0; j < i && !current.empty(); ++j) {
    current = intersect_with(d.flats, current,
                             separating_set(ci, d.chambers[static_cast<std::size_t>(order[j])].signs));
  }
  return UnionOfFlats{std::move(current)};
}

}  // namespace

std::vector<UnionOfFlats> star_set_sequence(const ArrangementData& d, const std::vector<int>& order) {
  require_permutation(d, order);
  std::vector<UnionOfFlats> out;
  out.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out.push_back(star_set(d, order, i));
  return out;
}

OrderCheck verify_valid_order(const ArrangementData& d, const std::vector<int>& order) {
  require_permutation(d, order);
  OrderCheck check;
  ValidOrder vo;
  vo.order = order;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const UnionOfFlats s = star_set(d, order, i);
    if (!s.is_single()) {
      check.failing_index = static_cast<int>(i);
      return check;
    }
    vo.star_flat_ids.push_back(s.flat_ids.front());
    vo.star_flats.push_back(d.flats.flats[static_cast<std::size_t>(s.flat_ids.front())].subspace);
  }
  check.valid = true;
  check.certificate = std::move(vo);
  return check;
}

double chamber_distance(const Arrangement& a, const Chamber& c, const std::vector<double>& x0,
                        int max_sweeps) {
  // Dykstra's alternating projection onto the half-spaces s_h (n_h . x - b_h) >= 0.
  const std::size_t n = x0.size();
  const std::size_t m = static_cast<std::size_t>(a.size());
  std::vector<std::vector<double>> normal(m, std::vector<double>(n));
  std::vector<double> offset(m);
  std::vector<double> norm2(m, 0.0);
  for (std::size_t h = 0; h < m; ++h) {
    const double s = static_cast<double>(static_cast<int>(c.signs[h]));
    const auto& hp = a.hyperplane(static_cast<int>(h));
    for (std::size_t t = 0; t < n; ++t) {
      normal[h][t] = s * hp.normal[t].get_d();
      norm2[h] += normal[h][t] * normal[h][t];
    }
    offset[h] = s * hp.offset.get_d();
  }
  std::vector<double> x = x0;
  std::vector<std::vector<double>> incr(m, std::vector<double>(n, 0.0));
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double moved = 0.0;
    for (std::size_t h = 0; h < m; ++h) {
      std::vector<double> y(n);
      for (std::size_t t = 0; t < n; ++t) y[t] = x[t] + incr[h][t];
      double v = -offset[h];
      for (std::size_t t = 0; t < n; ++t) v += normal[h][t] * y[t];
      std::vector<double> p = y;
      if (v < 0) {
        for (std::size_t t = 0; t < n; ++t) p[t] -= v / norm2[h] * normal[h][t];
      }
      for (std::size_t t = 0; t < n; ++t) {
        incr[h][t] = y[t] - p[t];
        moved = std::max(moved, std::abs(p[t] - x[t]));
        x[t] = p[t];
      }
    }
    if (moved < 1e-13) break;
  }
  double dist2 = 0.0;
  for (std::size_t t = 0; t < n; ++t) dist2 += (x[t] - x0[t]) * (x[t] - x0[t]);
  return std::sqrt(dist2);
}

std::vector<int> distance_order(const ArrangementData& d, const std::vector<double>& x0, int max_sweeps) {
  const std::size_t n = d.chambers.size();
  std::vector<double> dist(n);
  for (std::size_t c = 0; c < n; ++c) dist[c] = chamber_distance(d.a, d.chambers[c], x0, max_sweeps);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const double dx = dist[static_cast<std::size_t>(x)];
    const double dy = dist[static_cast<std::size_t>(y)];
    return dx != dy ? dx < dy : x < y;
  });
  // Group consecutive near-equal distances and order each group by id.
  std::size_t start = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == n || dist[static_cast<std::size_t>(order[k])] - dist[static_cast<std::size_t>(order[k - 1])] >= 1e-9) {
      std::sort(order.begin() + static_cast<std::ptrdiff_t>(start), order.begin() + static_cast<std::ptrdiff_t>(k));
      start = k;
    }
  }
  return order;
}

ValidOrder find_valid_order(const ArrangementData& d, std::uint64_t seed, const ValidOrderOptions& opt) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000000, 1000000);
  for (int attempt = 0; attempt < opt.retry_budget; ++attempt) {
    std::vector<double> x0(static_cast<std::size_t>(d.a.dim()));
    for (auto& v : x0) v = static_cast<double>(coord(rng)) / 1000.0;
    OrderCheck check = verify_valid_order(d, distance_order(d, x0, opt.projection_sweeps));
    if (check.valid) return std::move(*check.certificate);
  }
  throw VerificationFailure("no valid order found within the retry budget");
}

CellDecomposition cell_decomposition(const ArrangementData& d, const ValidOrder& vo) {
  const OrderCheck check = verify_valid_order(d, vo.order);
  if (!check.valid) throw InputError("order is not a valid order");
  CellDecomposition cd;
  const ValidOrder& cert = *check.certificate;
  for (std::size_t i = 0; i < cert.order.size(); ++i) {
    const AffineSubspace& s = cert.star_flats[i];
    cd.cells.push_back({cert.order[i], s, s.dim()});
    ++cd.census[s.dim()];
  }
  return cd;
}

namespace {

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> b) {
  while (b.size() > 1 && b.back() == 0) b.pop_back();
  if (b.empty()) b.push_back(0);
  return b;
}

}  // namespace

std::vector<std::int64_t> betti_from_cells(const CellDecomposition& cd, int n) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [dim, count] : cd.census) {
    if (dim < 0 || dim > n) throw InputError("cell dimension out of range");
    b[static_cast<std::size_t>(n - dim)] += count;
  }
  return trimmed(std::move(b));
}

std::vector<std::int64_t> whitney_betti(const Arrangement& a, const FlatsPoset& flats) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(a.dim()) + 1, 0);
  for (int k = 0; k < flats.size(); ++k) {
    const Integer m = abs(flats.mobius[static_cast<std::size_t>(k)]);
    b[static_cast<std::size_t>(flats.flats[static_cast<std::size_t>(k)].subspace.codim())] += m.get_si();
  }
  return trimmed(std::move(b));
}

}  // namespace hyparr
