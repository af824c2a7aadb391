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

#include "hyparr/posets.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyparr {

PartialOrder::PartialOrder(int n)
    : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64),
      bits_(static_cast<std::size_t>(n) * words_, 0) {}

void PartialOrder::set(int i, int j) {
  bits_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j) / 64] |=
      std::uint64_t{1} << (j % 64);
}

bool PartialOrder::leq(int i, int j) const {
  return (row(i)[static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1U;
}

bool PartialOrder::is_partial_order() const {
  for (int i = 0; i < n_; ++i) {
    if (!leq(i, i)) return false;
    for (int j = 0; j < n_; ++j) {
      if (i == j || !leq(i, j)) continue;
      if (leq(j, i)) return false;
      const auto* ri = row(i);
      const auto* rj = row(j);
      for (std::size_t w = 0; w < words_; ++w) {
        if ((rj[w] & ~ri[w]) != 0) return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<int, int>> PartialOrder::covers() const {
  std::vector<std::uint64_t> down(bits_.size(), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (leq(i, j)) {
        down[static_cast<std::size_t>(j) * words_ + static_cast<std::size_t>(i) / 64] |=
            std::uint64_t{1} << (i % 64);
      }
    }
  }
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i == j || !leq(i, j)) continue;
      int between = 0;
      const auto* up = row(i);
      const auto* dn = down.data() + static_cast<std::size_t>(j) * words_;
      for (std::size_t w = 0; w < words_; ++w) between += std::popcount(up[w] & dn[w]);
      if (between == 2) out.emplace_back(i, j);
    }
  }
  return out;
}

Integer PartialOrder::order_complex_euler_characteristic() const {
  // g(x) = signed count of chains with top x; chi = sum of g.
  std::vector<int> below(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (leq(i, j)) ++below[static_cast<std::size_t>(j)];
    }
  }
  std::vector<int> order(static_cast<std::size_t>(n_));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return below[static_cast<std::size_t>(x)] < below[static_cast<std::size_t>(y)]; });
  std::vector<Integer> g(static_cast<std::size_t>(n_), Integer(0));
  Integer chi = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int x = order[k];
    Integer v = 1;
    for (std::size_t l = 0; l < k; ++l) {
      const int y = order[l];
      if (leq(y, x)) v -= g[static_cast<std::size_t>(y)];
    }
    g[static_cast<std::size_t>(x)] = v;
    chi += v;
  }
  return chi;
}

PartialOrder flats_order(const FlatsPoset& flats) {
  PartialOrder order(flats.size());
  for (int k = 0; k < flats.size(); ++k) {
    for (int l = 0; l < flats.size(); ++l) {
      if (flats.leq(k, l)) order.set(k, l);
    }
  }
  return order;
}

std::vector<SignVector> subarrangement_chamber_signs(const Arrangement& a, HyperplaneSet subset) {
  if (subset == 0) return {SignVector(static_cast<std::size_t>(a.size()), Sign::kZero)};
  const std::vector<int> idx = members(subset);
  std::vector<SignVector> out;
  for (const Chamber& c : enumerate_chambers(a.subarrangement(subset))) {
    SignVector full(static_cast<std::size_t>(a.size()), Sign::kZero);
    for (std::size_t k = 0; k < idx.size(); ++k) full[static_cast<std::size_t>(idx[k])] = c.signs[k];
    out.push_back(std::move(full));
  }
  return out;
}

namespace {

bool agree_on(const SignVector& c, const SignVector& d, HyperplaneSet on) {
  for (int h : members(on)) {
    if (c[static_cast<std::size_t>(h)] != d[static_cast<std::size_t>(h)]) return false;
  }
  return true;
}

}  // namespace

StratPoset build_strat_poset(const Arrangement& a, const FlatsPoset& flats) {
  StratPoset p;
  for (int k = 0; k < flats.size(); ++k) {
    for (auto& c : subarrangement_chamber_signs(a, flats.flats[static_cast<std::size_t>(k)].supp)) {
      p.elements.push_back({k, std::move(c)});
    }
  }
  const int n = static_cast<int>(p.elements.size());
  p.order = PartialOrder(n);
  for (int i = 0; i < n; ++i) {
    const auto& x = p.elements[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const auto& y = p.elements[static_cast<std::size_t>(j)];
      if (flats.leq(x.flat, y.flat) &&
          agree_on(x.chamber, y.chamber, flats.flats[static_cast<std::size_t>(x.flat)].supp)) {
        p.order.set(i, j);
      }
    }
  }
  if (!p.order.is_partial_order()) throw std::logic_error("Strat(A) relation is not a partial order");
  return p;
}

std::vector<Face> enumerate_faces(const Arrangement& a, const FlatsPoset& flats) {
  std::vector<Face> faces;
  for (int k = 0; k < flats.size(); ++k) {
    const Flat& flat = flats.flats[static_cast<std::size_t>(k)];
    const Parametrization par = flat.subspace.parametrize();
    const int d = static_cast<int>(par.directions.size());
    std::vector<Hyperplane> induced;
    if (d > 0) {
      for (int h = 0; h < a.size(); ++h) {
        if (contains(flat.supp, h)) continue;
        const auto& hp = a.hyperplane(h);
        QVec normal(static_cast<std::size_t>(d));
        bool zero = true;
        for (int t = 0; t < d; ++t) {
          normal[static_cast<std::size_t>(t)] = dot(hp.normal, par.directions[static_cast<std::size_t>(t)]);
          if (normal[static_cast<std::size_t>(t)] != 0) zero = false;
        }
        if (zero) continue;  // parallel to K and not containing it
        Hyperplane local = Hyperplane::normalized(std::move(normal), hp.offset - dot(hp.normal, par.origin));
        if (std::find(induced.begin(), induced.end(), local) == induced.end()) induced.push_back(std::move(local));
      }
    }
    if (induced.empty()) {
      faces.push_back({k, a.signs_at(par.origin), par.origin});
      continue;
    }
    for (const Chamber& c : enumerate_chambers(Arrangement(d, std::move(induced)))) {
      QVec w = par.at(c.witness);
      faces.push_back({k, a.signs_at(w), std::move(w)});
    }
  }
  return faces;
}

bool face_leq(const Face& f, const Face& g) {
  for (std::size_t h = 0; h < f.signs.size(); ++h) {
    if (g.signs[h] != Sign::kZero && g.signs[h] != f.signs[h]) return false;
  }
  return true;
}

SalvettiPoset build_salvetti_poset(const Arrangement& a, const FlatsPoset& flats) {
  SalvettiPoset p;
  p.faces = enumerate_faces(a, flats);
  std::map<HyperplaneSet, std::vector<SignVector>> chamber_cache;
  for (int f = 0; f < static_cast<int>(p.faces.size()); ++f) {
    const HyperplaneSet supp = flats.flats[static_cast<std::size_t>(p.faces[static_cast<std::size_t>(f)].flat)].supp;
    auto it = chamber_cache.find(supp);
    if (it == chamber_cache.end()) it = chamber_cache.emplace(supp, subarrangement_chamber_signs(a, supp)).first;
    for (const auto& c : it->second) p.elements.push_back({f, c});
  }
  const int n = static_cast<int>(p.elements.size());
  p.order = PartialOrder(n);
  for (int i = 0; i < n; ++i) {
    const auto& x = p.elements[static_cast<std::size_t>(i)];
    const Face& fx = p.faces[static_cast<std::size_t>(x.face)];
    const HyperplaneSet supp = flats.flats[static_cast<std::size_t>(fx.flat)].supp;
    for (int j = 0; j < n; ++j) {
      const auto& y = p.elements[static_cast<std::size_t>(j)];
      if (face_leq(fx, p.faces[static_cast<std::size_t>(y.face)]) && agree_on(x.chamber, y.chamber, supp)) {
        p.order.set(i, j);
      }
    }
  }
  if (!p.order.is_partial_order()) throw std::logic_error("Sal(A) relation is not a partial order");
  return p;
}

std::string to_dot(const std::string& name, const std::vector<std::string>& labels,
                   const PartialOrder& order) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  }
  for (const auto& [i, j] : order.covers()) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace hyparr
