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

#include "hyparr/arrangement.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hyparr/error.hpp"
#include "hyparr/simplex.hpp"

namespace hyparr {

char sign_char(Sign s) {
  switch (s) {
    case Sign::kNeg: return '-';
    case Sign::kZero: return '0';
    case Sign::kPos: return '+';
  }
  return '?';
}

std::string to_string(const SignVector& v) {
  std::string s;
  s.reserve(v.size());
  for (Sign x : v) s.push_back(sign_char(x));
  return s;
}

std::vector<int> members(HyperplaneSet s) {
  std::vector<int> out;
  for (int i = 0; i < kMaxHyperplanes; ++i) {
    if (contains(s, i)) out.push_back(i);
  }
  return out;
}

namespace {

Sign to_sign(int s) { return s > 0 ? Sign::kPos : (s < 0 ? Sign::kNeg : Sign::kZero); }

}  // namespace

Hyperplane Hyperplane::normalized(QVec normal, Rat offset) {
  auto first = std::find_if(normal.begin(), normal.end(), [](const Rat& x) { return x != 0; });
  if (first == normal.end()) throw InputError("hyperplane has zero normal");
  QVec all = normal;
  all.push_back(offset);
  const Integer m = denominator_lcm(all);
  for (auto& x : all) x *= m;
  const Integer g = content(all);
  Rat factor = Rat(m) / Rat(g);
  if (*first < 0) factor = -factor;
  for (auto& x : normal) x *= factor;
  offset *= factor;
  return Hyperplane{std::move(normal), std::move(offset)};
}

Sign Hyperplane::side(std::span<const Rat> x) const { return to_sign(sgn(evaluate(x))); }

Arrangement::Arrangement(int dim, std::vector<Hyperplane> hyperplanes) : dim_(dim) {
  if (dim < 1) throw InputError("arrangement dimension must be at least 1");
  if (hyperplanes.size() > static_cast<std::size_t>(kMaxHyperplanes)) {
    throw InputError("at most 64 hyperplanes are supported");
  }
  hyperplanes_.reserve(hyperplanes.size());
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    if (static_cast<int>(hyperplanes[i].normal.size()) != dim) {
      throw InputError("hyperplane " + std::to_string(i) + " has normal of length " +
                       std::to_string(hyperplanes[i].normal.size()) + ", expected " +
                       std::to_string(dim));
    }
    Hyperplane h = Hyperplane::normalized(std::move(hyperplanes[i].normal),
                                          std::move(hyperplanes[i].offset));
    for (std::size_t j = 0; j < hyperplanes_.size(); ++j) {
      if (hyperplanes_[j] == h) {
        throw InputError("hyperplanes " + std::to_string(j) + " and " + std::to_string(i) +
                         " are the same after normalization");
      }
    }
    hyperplanes_.push_back(std::move(h));
  }
}

HyperplaneSet Arrangement::all() const {
  return size() == kMaxHyperplanes ? ~HyperplaneSet{0} : (HyperplaneSet{1} << size()) - 1;
}

Arrangement Arrangement::subarrangement(HyperplaneSet subset) const {
  std::vector<Hyperplane> hs;
  for (int i = 0; i < size(); ++i) {
    if (contains(subset, i)) hs.push_back(hyperplanes_[static_cast<std::size_t>(i)]);
  }
  return Arrangement(dim_, std::move(hs));
}

SignVector Arrangement::signs_at(std::span<const Rat> x) const {
  SignVector v;
  v.reserve(hyperplanes_.size());
  for (const auto& h : hyperplanes_) v.push_back(h.side(x));
  return v;
}

namespace {

QVec unit_difference(int n, int i, int j, int sign_j) {
  QVec v(static_cast<std::size_t>(n), Rat(0));
  v[static_cast<std::size_t>(i)] = 1;
  if (j >= 0) v[static_cast<std::size_t>(j)] = sign_j;
  return v;
}

}  // namespace

Arrangement braid_arrangement(int n) {
  std::vector<Hyperplane> hs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) hs.push_back({unit_difference(n, i, j, -1), Rat(0)});
  }
  return Arrangement(n, std::move(hs));
}

Arrangement type_b_arrangement(int n) {
  std::vector<Hyperplane> hs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      hs.push_back({unit_difference(n, i, j, -1), Rat(0)});
      hs.push_back({unit_difference(n, i, j, 1), Rat(0)});
    }
  }
  for (int i = 0; i < n; ++i) hs.push_back({unit_difference(n, i, -1, 0), Rat(0)});
  return Arrangement(n, std::move(hs));
}

Arrangement boolean_arrangement(int n) {
  std::vector<Hyperplane> hs;
  for (int i = 0; i < n; ++i) hs.push_back({unit_difference(n, i, -1, 0), Rat(0)});
  return Arrangement(n, std::move(hs));
}

Arrangement random_arrangement(std::uint64_t seed, int max_dim, int max_hyperplanes) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_dist(1, max_dim);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const int n = dim_dist(rng);
  std::uniform_int_distribution<int> count_dist(1, max_hyperplanes);
  const int target = count_dist(rng);
  std::vector<Hyperplane> hs;
  for (int attempts = 0; static_cast<int>(hs.size()) < target && attempts < 1000; ++attempts) {
    QVec normal(static_cast<std::size_t>(n));
    for (auto& x : normal) x = coeff(rng);
    const Rat offset = coeff(rng);
    if (std::all_of(normal.begin(), normal.end(), [](const Rat& x) { return x == 0; })) continue;
    Hyperplane h = Hyperplane::normalized(normal, offset);
    if (std::find(hs.begin(), hs.end(), h) != hs.end()) continue;
    hs.push_back(std::move(h));
  }
  return Arrangement(n, std::move(hs));
}

namespace {

// Largest power of two strictly below every f_j / |g_j|, capped at 1.
Rat dyadic_step_below(const std::vector<Rat>& bounds) {
  Rat step = 1;
  for (const Rat& b : bounds) {
    while (step >= b) step /= 2;
  }
  return step;
}

std::vector<StrictHalfspace> chamber_constraints(const Arrangement& a, const SignVector& signs) {
  std::vector<StrictHalfspace> cs;
  cs.reserve(signs.size() + 1);
  for (std::size_t j = 0; j < signs.size(); ++j) {
    const auto& h = a.hyperplane(static_cast<int>(j));
    cs.push_back({&h.normal, &h.offset, static_cast<int>(signs[j])});
  }
  return cs;
}

}  // namespace

std::vector<Chamber> enumerate_chambers(const Arrangement& a) {
  const auto n = static_cast<std::size_t>(a.dim());
  std::vector<Chamber> chambers{Chamber{{}, QVec(n, Rat(0))}};
  for (int h = 0; h < a.size(); ++h) {
    const Hyperplane& hp = a.hyperplane(h);
    std::vector<Chamber> next;
    next.reserve(chambers.size() * 2);
    for (Chamber& c : chambers) {
      const Sign s = hp.side(c.witness);
      if (s == Sign::kZero) {
        // The witness lies on the new hyperplane: step off it along the
        // normal in both directions, staying inside the chamber.
        std::vector<Rat> bounds;
        for (std::size_t j = 0; j < c.signs.size(); ++j) {
          const auto& hj = a.hyperplane(static_cast<int>(j));
          const Rat g = dot(hj.normal, hp.normal);
          if (g == 0) continue;
          bounds.push_back(abs(hj.evaluate(c.witness)) / abs(g));
        }
        const Rat step = dyadic_step_below(bounds);
        Chamber plus = c;
        Chamber minus = std::move(c);
        for (std::size_t i = 0; i < n; ++i) {
          plus.witness[i] += step * hp.normal[i];
          minus.witness[i] -= step * hp.normal[i];
        }
        plus.signs.push_back(Sign::kPos);
        minus.signs.push_back(Sign::kNeg);
        next.push_back(std::move(plus));
        next.push_back(std::move(minus));
        continue;
      }
      const Sign other = s == Sign::kPos ? Sign::kNeg : Sign::kPos;
      auto cs = chamber_constraints(a, c.signs);
      cs.push_back({&hp.normal, &hp.offset, static_cast<int>(other)});
      auto p = strict_feasible_point(cs, a.dim());
      Chamber kept = std::move(c);
      if (p) {
        Chamber split{kept.signs, std::move(*p)};
        split.signs.push_back(other);
        next.push_back(std::move(split));
      }
      kept.signs.push_back(s);
      next.push_back(std::move(kept));
    }
    chambers = std::move(next);
  }
  std::sort(chambers.begin(), chambers.end(),
            [](const Chamber& x, const Chamber& y) { return x.signs < y.signs; });
  return chambers;
}

HyperplaneSet separating_set(const SignVector& c, const SignVector& d) {
  if (c.size() != d.size()) throw InputError("separating_set: sign vectors differ in length");
  HyperplaneSet s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != d[i]) s |= singleton(static_cast<int>(i));
  }
  return s;
}

HyperplaneSet separating_set(const Arrangement& a, const Chamber& c, const Chamber& d) {
  if (static_cast<int>(c.signs.size()) != a.size() || static_cast<int>(d.signs.size()) != a.size()) {
    throw InputError("separating_set: sign vector length does not match the arrangement");
  }
  return separating_set(c.signs, d.signs);
}

HyperplaneSet support(const Arrangement& a, std::span<const Rat> point) {
  if (static_cast<int>(point.size()) != a.dim()) throw InputError("support: dimension mismatch");
  HyperplaneSet s = 0;
  for (int i = 0; i < a.size(); ++i) {
    if (a.hyperplane(i).evaluate(point) == 0) s |= singleton(i);
  }
  return s;
}

HyperplaneSet support(const Arrangement& a, const AffineSubspace& sub) {
  if (sub.ambient_dim() != a.dim()) throw InputError("support: dimension mismatch");
  if (sub.is_empty()) throw InputError("support: EMPTY subspace");
  HyperplaneSet s = 0;
  for (int i = 0; i < a.size(); ++i) {
    if (affine_contains(a.hyperplane(i).subspace(), sub)) s |= singleton(i);
  }
  return s;
}

int FlatsPoset::index_of(const AffineSubspace& s) const {
  for (int i = 0; i < size(); ++i) {
    if (flats[static_cast<std::size_t>(i)].subspace == s) return i;
  }
  return -1;
}

FlatsPoset enumerate_flats(const Arrangement& a) {
  std::vector<AffineSubspace> found{AffineSubspace::ambient(a.dim())};
  std::map<AffineSubspace, int> index{{found[0], 0}};
  std::vector<std::vector<int>> meet;
  std::vector<AffineSubspace> hyperplanes;
  for (const auto& h : a.hyperplanes()) hyperplanes.push_back(h.subspace());
  for (std::size_t k = 0; k < found.size(); ++k) {
    std::vector<int> row(static_cast<std::size_t>(a.size()), -1);
    for (int h = 0; h < a.size(); ++h) {
      AffineSubspace cut = affine_intersect(found[k], hyperplanes[static_cast<std::size_t>(h)]);
      if (cut.is_empty()) continue;
      auto [it, inserted] = index.try_emplace(cut, static_cast<int>(found.size()));
      if (inserted) found.push_back(cut);
      row[static_cast<std::size_t>(h)] = it->second;
    }
    meet.push_back(std::move(row));
  }

  std::vector<int> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const auto& fx = found[static_cast<std::size_t>(x)];
    const auto& fy = found[static_cast<std::size_t>(y)];
    if (fx.dim() != fy.dim()) return fx.dim() > fy.dim();
    return fx < fy;
  });
  std::vector<int> rank_of(found.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank_of[static_cast<std::size_t>(order[r])] = static_cast<int>(r);

  FlatsPoset poset;
  for (int old : order) {
    const auto& s = found[static_cast<std::size_t>(old)];
    poset.flats.push_back(Flat{s, support(a, s)});
    std::vector<int> row = meet[static_cast<std::size_t>(old)];
    for (int& m : row) {
      if (m >= 0) m = rank_of[static_cast<std::size_t>(m)];
    }
    poset.meet.push_back(std::move(row));
  }
  poset.mobius.assign(poset.flats.size(), Integer(0));
  poset.mobius[0] = 1;
  for (int k = 1; k < poset.size(); ++k) {
    Integer sum = 0;
    for (int l = 0; l < k; ++l) {
      if (poset.leq(l, k)) sum += poset.mobius[static_cast<std::size_t>(l)];
    }
    poset.mobius[static_cast<std::size_t>(k)] = -sum;
  }
  return poset;
}

std::size_t ChamberCounter::count(HyperplaneSet subset) {
  auto it = cache_.find(subset);
  if (it != cache_.end()) return it->second;
  const std::size_t c =
      subset == 0 ? 1 : enumerate_chambers(arrangement_->subarrangement(subset)).size();
  cache_.emplace(subset, c);
  return c;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t count_points_XA(const Arrangement& a, int q) {
  if (!is_prime(q)) throw InputError("count_points_XA: q=" + std::to_string(q) + " is not prime");
  const int n = a.dim();
  double total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  if (total > 1e9) throw InputError("count_points_XA: q^n exceeds the enumeration budget");

  std::vector<std::vector<long>> normals;
  std::vector<long> offsets;
  for (int h = 0; h < a.size(); ++h) {
    const auto& hp = a.hyperplane(h);
    std::vector<long> row;
    bool degenerate = true;
    for (const auto& x : hp.normal) {
      long v = mpz_fdiv_ui(x.get_num_mpz_t(), static_cast<unsigned long>(q));
      if (v != 0) degenerate = false;
      row.push_back(v);
    }
    if (degenerate) {
      throw InputError("count_points_XA: hyperplane " + std::to_string(h) +
                       " has a normal divisible by " + std::to_string(q));
    }
    normals.push_back(std::move(row));
    offsets.push_back(static_cast<long>(mpz_fdiv_ui(hp.offset.get_num_mpz_t(), static_cast<unsigned long>(q))));
  }

  ChamberCounter counter(a);
  std::map<HyperplaneSet, std::uint64_t> pattern_count;
  std::vector<long> y(static_cast<std::size_t>(n), 0);
  for (;;) {
    HyperplaneSet s = 0;
    for (int h = 0; h < a.size(); ++h) {
      long acc = 0;
      for (int i = 0; i < n; ++i) acc += normals[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
      if ((acc - offsets[static_cast<std::size_t>(h)]) % q == 0) s |= singleton(h);
    }
    ++pattern_count[s];
    int i = 0;
    while (i < n && ++y[static_cast<std::size_t>(i)] == q) y[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  std::uint64_t result = 0;
  for (const auto& [s, m] : pattern_count) result += m * counter.count(s);
  return result;
}

}  // namespace hyparr
