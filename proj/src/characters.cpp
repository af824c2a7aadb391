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

#include "hyparr/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hyparr/error.hpp"

namespace hyparr {

const Rat& ClassFunction::operator()(const ConjClassLabel& c) const {
  auto it = values.find(c);
  if (it == values.end()) throw InputError("class function has no value at " + to_string(c));
  return it->second;
}

void ClassFunction::validate() const {
  const auto labels = all_labels(family, n);
  if (labels.size() != values.size()) throw InputError("class function must list every conjugacy class exactly once");
  for (const auto& l : labels) {
    if (!values.contains(l)) throw InputError("class function misses class " + to_string(l));
  }
}

namespace {

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.family != b.family || a.n != b.n) throw InputError("class functions live on different groups");
}

template <typename F>
ClassFunction tabulate(Family f, int n, F&& value) {
  ClassFunction c{f, n, {}};
  for (const auto& l : all_labels(f, n)) c.values.emplace(l, value(l));
  return c;
}

int sign_of_parts(const Partition& p) {
  int s = 0;
  for (int part : p) s += part - 1;
  return s % 2 == 0 ? 1 : -1;
}

}  // namespace

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  require_same_group(*this, o);
  ClassFunction r = *this;
  for (auto& [l, v] : r.values) v += o(l);
  return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  require_same_group(*this, o);
  ClassFunction r = *this;
  for (auto& [l, v] : r.values) v -= o(l);
  return r;
}

ClassFunction ClassFunction::operator*(const Rat& c) const {
  ClassFunction r = *this;
  for (auto& [l, v] : r.values) v *= c;
  return r;
}

ClassFunction zero_class_function(Family f, int n) {
  return tabulate(f, n, [](const ConjClassLabel&) { return Rat(0); });
}

ClassFunction trivial_character(Family f, int n) {
  return tabulate(f, n, [](const ConjClassLabel&) { return Rat(1); });
}

ClassFunction regular_character(Family f, int n) {
  const ConjClassLabel id = identity_label(f, n);
  const Rat order(static_cast<unsigned long>(WeylGroup(f, n).order()));
  return tabulate(f, n, [&](const ConjClassLabel& l) { return l == id ? order : Rat(0); });
}

ClassFunction indicator(Family f, int n, const ConjClassLabel& c) {
  ClassFunction r = tabulate(f, n, [&](const ConjClassLabel& l) { return l == c ? Rat(1) : Rat(0); });
  if (!r.values.contains(c)) throw InputError("label " + to_string(c) + " is not a class of " + group_name(f, n));
  return r;
}

namespace {

// chi over beta-sets: remove rim hooks of length rho.back() recursively.
Integer mn_beta(std::vector<int>& beta, const Partition& rho, std::size_t len,
                std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
  if (len == 0) return 1;
  auto key = std::make_pair(beta, len);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = rho[len - 1];
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int nb = b - r;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int x : beta) {
      if (x > nb && x < b) ++between;
    }
    beta[i] = nb;
    std::vector<int> next = beta;
    std::sort(next.begin(), next.end());
    const Integer sub = mn_beta(next, rho, len - 1, memo);
    beta[i] = b;
    total += between % 2 == 0 ? sub : Integer(-sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_character_value(const Partition& lambda, const Partition& rho) {
  if (weight(lambda) != weight(rho)) throw InputError("partitions of different weight");
  const Partition l = canonical_partition(lambda);
  std::vector<int> beta;
  for (std::size_t i = 0; i < l.size(); ++i) beta.push_back(l[i] + static_cast<int>(l.size() - 1 - i));
  std::sort(beta.begin(), beta.end());
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
  return mn_beta(beta, canonical_partition(rho), rho.size(), memo);
}

ClassFunction sn_irreducible_character(const Partition& lambda) {
  const int n = weight(lambda);
  return tabulate(Family::A, n, [&](const ConjClassLabel& c) { return Rat(mn_character_value(lambda, c.lambda)); });
}

ClassFunction b_sign_product_character(int n) {
  return tabulate(Family::B, n, [](const ConjClassLabel& c) { return Rat(c.lambda.size() % 2 == 0 ? 1 : -1); });
}

ClassFunction b_perm_sign_character(int n) {
  return tabulate(Family::B, n, [](const ConjClassLabel& c) { return Rat(sign_of_parts(c.lambda) * sign_of_parts(c.mu)); });
}

ClassFunction b_det_character(int n) {
  return tabulate(Family::B, n, [](const ConjClassLabel& c) {
    const int eps = c.lambda.size() % 2 == 0 ? 1 : -1;
    return Rat(eps * sign_of_parts(c.lambda) * sign_of_parts(c.mu));
  });
}

ClassFunction b_permutation_character(int n) {
  return tabulate(Family::B, n, [](const ConjClassLabel& c) {
    return Rat(2 * static_cast<long>(std::count(c.mu.begin(), c.mu.end(), 1)));
  });
}

std::vector<std::pair<std::string, ClassFunction>> b_builtin_characters(int n) {
  return {{"trivial", trivial_character(Family::B, n)},
          {"sign", b_det_character(n)},
          {"sign_product", b_sign_product_character(n)},
          {"perm_sign", b_perm_sign_character(n)},
          {"permutation", b_permutation_character(n)}};
}

std::map<ConjClassLabel, std::uint64_t> class_sizes(const WeylGroup& g) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::map<ConjClassLabel, std::uint64_t>> cache;
  std::lock_guard lock(mu);
  const auto key = std::make_pair(g.family(), g.n());
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::map<ConjClassLabel, std::uint64_t> sizes;
  for (const auto& l : all_labels(g.family(), g.n())) sizes[l] = 0;
  for (const auto& w : g.elements()) ++sizes[class_label(g, w)];
  cache.emplace(key, sizes);
  return sizes;
}

Rat inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  require_same_group(chi, psi);
  const WeylGroup g(chi.family, chi.n);
  Rat sum = 0;
  for (const auto& [l, size] : class_sizes(g)) sum += Rat(static_cast<unsigned long>(size)) * chi(l) * psi(l);
  return sum / Rat(static_cast<unsigned long>(g.order()));
}

}  // namespace hyparr
