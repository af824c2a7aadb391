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

#include "hyparr/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hyparr/error.hpp"

namespace hyparr {

GroupElement identity_element(int n) {
  GroupElement e{std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n), 1)};
  std::iota(e.perm.begin(), e.perm.end(), 0);
  return e;
}

GroupElement inverse(const GroupElement& w) {
  const std::size_t n = w.perm.size();
  GroupElement r{std::vector<int>(n), std::vector<int>(n)};
  for (std::size_t j = 0; j < n; ++j) r.perm[static_cast<std::size_t>(w.perm[j])] = static_cast<int>(j);
  // w^-1 . x: (w^-1 x)_j = s_{perm(j)} x_{perm(j)}.
  for (std::size_t j = 0; j < n; ++j) r.signs[j] = w.signs[static_cast<std::size_t>(w.perm[j])];
  return r;
}

GroupElement compose(const GroupElement& w, const GroupElement& v) {
  if (w.perm.size() != v.perm.size()) throw InputError("composing elements of different rank");
  const std::size_t n = w.perm.size();
  const GroupElement winv = inverse(w);
  GroupElement r{std::vector<int>(n), std::vector<int>(n)};
  for (std::size_t j = 0; j < n; ++j) r.perm[j] = w.perm[static_cast<std::size_t>(v.perm[j])];
  for (std::size_t i = 0; i < n; ++i) r.signs[i] = w.signs[i] * v.signs[static_cast<std::size_t>(winv.perm[i])];
  return r;
}

QVec act(const GroupElement& w, std::span<const Rat> x) {
  if (x.size() != w.perm.size()) throw InputError("point dimension does not match the group");
  QVec r(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto i = static_cast<std::size_t>(w.perm[j]);
    r[i] = w.signs[i] * x[j];
  }
  return r;
}

std::vector<ExtField::Elem> act(const ExtField& f, const GroupElement& w, const std::vector<ExtField::Elem>& y) {
  std::vector<ExtField::Elem> r(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    const auto i = static_cast<std::size_t>(w.perm[j]);
    r[i] = w.signs[i] < 0 ? f.neg(y[j]) : y[j];
  }
  return r;
}

std::string to_string(const GroupElement& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < w.perm.size(); ++j) {
    if (j) os << ' ';
    const int s = w.signs[static_cast<std::size_t>(w.perm[j])];
    os << (j + 1) << "->" << (s < 0 ? "-" : "") << (w.perm[j] + 1);
  }
  os << ']';
  return os.str();
}

WeylGroup::WeylGroup(Family family, int n) : family_(family), n_(n) {
  if (n < 1 || n > 6) throw InputError("Weyl group rank must be in [1, 6]");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (family == Family::A) {
      elements_.push_back({perm, std::vector<int>(static_cast<std::size_t>(n), 1)});
    } else {
      for (unsigned mask = 0; mask < (1U << n); ++mask) {
        std::vector<int> signs(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) signs[static_cast<std::size_t>(i)] = ((mask >> i) & 1U) ? -1 : 1;
        elements_.push_back({perm, std::move(signs)});
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

void WeylGroup::require_member(const GroupElement& w) const {
  if (w.n() != n_ || w.signs.size() != w.perm.size()) throw InputError("element has the wrong rank");
  std::vector<int> sorted = w.perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n_; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) throw InputError("element perm is not a bijection");
  }
  for (int s : w.signs) {
    if (s != 1 && s != -1) throw InputError("element signs must be +1 or -1");
    if (family_ == Family::A && s != 1) throw InputError("type A elements carry no signs");
  }
}

std::vector<int> WeylGroup::exponents() const {
  std::vector<int> m;
  for (int i = 0; i < n_; ++i) m.push_back(family_ == Family::A ? i : 2 * i + 1);
  return m;
}

Arrangement reflection_arrangement(const WeylGroup& w) {
  return w.family() == Family::A ? braid_arrangement(w.n()) : type_b_arrangement(w.n());
}

Chamber default_base_chamber(const WeylGroup& w, const Arrangement& a) {
  QVec x(static_cast<std::size_t>(w.n()));
  for (int i = 0; i < w.n(); ++i) x[static_cast<std::size_t>(i)] = w.n() - i;
  return Chamber{a.signs_at(x), x};
}

ConjClassLabel class_label(const WeylGroup& g, const GroupElement& w) {
  g.require_member(w);
  ConjClassLabel label{g.family(), {}, {}};
  std::vector<bool> seen(w.perm.size(), false);
  for (std::size_t j = 0; j < w.perm.size(); ++j) {
    if (seen[j]) continue;
    int length = 0;
    int sign = 1;
    for (std::size_t k = j; !seen[k]; k = static_cast<std::size_t>(w.perm[k])) {
      seen[k] = true;
      ++length;
      sign *= w.signs[static_cast<std::size_t>(w.perm[k])];
    }
    if (g.family() == Family::A || sign > 0) {
      (g.family() == Family::A ? label.lambda : label.mu).push_back(length);
    } else {
      label.lambda.push_back(length);
    }
  }
  label.lambda = canonical_partition(std::move(label.lambda));
  label.mu = canonical_partition(std::move(label.mu));
  return label;
}

AffineSubspace fix_subspace(const GroupElement& w) {
  const std::size_t n = w.perm.size();
  QMat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto i = static_cast<std::size_t>(w.perm[j]);
    m(i, j) += w.signs[i];
    m(i, i) -= 1;
  }
  return AffineSubspace::from_equations(m, QVec(n, Rat(0)));
}

QPoly inertia_polynomial(const WeylGroup& g) {
  std::vector<Rat> c(static_cast<std::size_t>(g.n()) + 1, Rat(0));
  for (const auto& w : g.elements()) c[static_cast<std::size_t>(fix_subspace(w).codim())] += 1;
  return QPoly(std::move(c));
}

QPoly exponent_product(const WeylGroup& g) {
  QPoly p = QPoly::constant(Rat(1));
  for (int m : g.exponents()) {
    if (m != 0) p = p * QPoly({Rat(1), Rat(m)});
  }
  return p;
}

GroupElement minimal_representative(const Arrangement& a, const std::vector<GroupElement>& coset,
                                    HyperplaneSet supp, const Chamber& c0) {
  const GroupElement* found = nullptr;
  for (const auto& u : coset) {
    const QVec x = act(u, c0.witness);
    bool same = true;
    for (int h : members(supp)) {
      if (a.hyperplane(h).side(x) != c0.signs[static_cast<std::size_t>(h)]) {
        same = false;
        break;
      }
    }
    if (!same) continue;
    if (found != nullptr) throw InputError("more than one coset element preserves the base chamber signs");
    found = &u;
  }
  if (found == nullptr) throw InputError("no coset element preserves the base chamber signs");
  return *found;
}

HyperplaneSet support_over(const ExtField& f, const Arrangement& a, const std::vector<ExtField::Elem>& y) {
  HyperplaneSet s = 0;
  for (int h = 0; h < a.size(); ++h) {
    const Hyperplane& hp = a.hyperplane(h);
    ExtField::Elem v = f.from_base(static_cast<int>(mpz_class(-hp.offset.get_num()).get_si() % f.q()));
    for (std::size_t i = 0; i < y.size(); ++i) {
      const long c = mpz_class(hp.normal[i].get_num()).get_si();
      v = f.add(v, f.mul(f.from_base(static_cast<int>(c % f.q())), y[i]));
    }
    if (v == f.zero()) s |= singleton(h);
  }
  return s;
}

namespace {

ConjClassLabel frobenius_class_once(const WeylGroup& g, const Arrangement& a, const Chamber& c0,
                                    const ExtField& f, const std::vector<ExtField::Elem>& y) {
  std::vector<ExtField::Elem> fy(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) fy[i] = f.frobenius(y[i]);
  std::vector<GroupElement> coset;
  for (const auto& w : g.elements()) {
    if (act(f, w, y) == fy) coset.push_back(w);
  }
  if (coset.empty()) throw InputError("Frobenius does not preserve the orbit");
  return class_label(g, minimal_representative(a, coset, support_over(f, a, y), c0));
}

}  // namespace

ConjClassLabel frobenius_class(const WeylGroup& g, const ExtField& f, const std::vector<ExtField::Elem>& y) {
  if (static_cast<int>(y.size()) != g.n()) throw InputError("orbit representative has the wrong length");
  const Arrangement a = reflection_arrangement(g);
  const Chamber c0 = default_base_chamber(g, a);
  const ConjClassLabel first = frobenius_class_once(g, a, c0, f, y);
  // Second lift: move y by a fixed element with all coordinates permuted.
  GroupElement shift = identity_element(g.n());
  std::rotate(shift.perm.begin(), shift.perm.begin() + 1, shift.perm.end());
  if (g.family() == Family::B) shift.signs[0] = -1;
  if (frobenius_class_once(g, a, c0, f, act(f, shift, y)) != first) {
    throw std::logic_error("Frobenius class depends on the chosen lift");
  }
  return first;
}

}  // namespace hyparr
