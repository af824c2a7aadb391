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

#include "hyparr/factstats.hpp"

#include <algorithm>
#include <numeric>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool divides(const FqPoly& g, const FqPoly& f) { return FqPoly::divmod(f, g).second.is_zero(); }

}  // namespace

IrreducibleSieve::IrreducibleSieve(int q, int max_degree) : q_(q) {
  if (q < 2) throw InputError("q must be prime");
  by_degree_.resize(static_cast<std::size_t>(std::max(max_degree, 0)) + 1);
  for (int d = 1; d <= max_degree; ++d) {
    const std::uint64_t count = ipow(static_cast<std::uint64_t>(q), d);
    for (std::uint64_t code = 0; code < count; ++code) {
      FqPoly f = FqPoly::monic_from_code(q, d, code);
      bool irreducible = true;
      for (int e = 1; 2 * e <= d && irreducible; ++e) {
        for (const auto& g : by_degree_[static_cast<std::size_t>(e)]) {
          if (divides(g, f)) {
            irreducible = false;
            break;
          }
        }
      }
      if (irreducible) by_degree_[static_cast<std::size_t>(d)].push_back(std::move(f));
    }
  }
}

const std::vector<FqPoly>& IrreducibleSieve::of_degree(int d) const {
  if (d < 0 || d > max_degree()) throw InputError("degree outside the sieve");
  return by_degree_[static_cast<std::size_t>(d)];
}

bool IrreducibleSieve::contains(const FqPoly& f) const {
  const auto& list = of_degree(f.degree());
  return std::binary_search(list.begin(), list.end(), f);
}

std::vector<FqPoly> factor_monic(const FqPoly& f, const IrreducibleSieve& sieve) {
  if (!f.is_monic() || f.degree() < 1) throw InputError("factor_monic needs a monic polynomial of degree >= 1");
  if (f.q() != sieve.q()) throw InputError("sieve is over a different field");
  if (sieve.max_degree() < f.degree() / 2) throw InputError("sieve does not reach half the degree");
  std::vector<FqPoly> out;
  FqPoly rest = f;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const auto& g : sieve.of_degree(d)) {
      if (2 * d > rest.degree()) break;
      for (;;) {
        auto [quo, rem] = FqPoly::divmod(rest, g);
        if (!rem.is_zero()) break;
        out.push_back(g);
        rest = std::move(quo);
      }
    }
  }
  if (rest.degree() >= 1) {
    if (rest.degree() <= sieve.max_degree() && !sieve.contains(rest)) {
      throw std::logic_error("trial division left a reducible cofactor");
    }
    out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition factorization_type(const FqPoly& f, const IrreducibleSieve& sieve) {
  Partition p;
  for (const auto& g : factor_monic(f, sieve)) p.push_back(g.degree());
  return canonical_partition(std::move(p));
}

bool is_even(const FqPoly& f) { return f.negated_variable() == f; }

ConjClassLabel even_factorization_type(const FqPoly& f, const IrreducibleSieve& sieve) {
  if (f.q() == 2) throw InputError("even factorization type needs odd q");
  if (!is_even(f) || f.degree() % 2 != 0) throw InputError("polynomial is not even");
  const std::vector<FqPoly> factors = factor_monic(f, sieve);
  std::map<FqPoly, int> mult;
  for (const auto& g : factors) ++mult[g];
  ConjClassLabel label{Family::B, {}, {}};
  const FqPoly t = FqPoly::variable(f.q());
  for (const auto& [g, m] : mult) {
    if (g == t) {
      for (int i = 0; i < m / 2; ++i) label.mu.push_back(1);
      continue;
    }
    const FqPoly partner = g.negated_variable().scaled(g.degree() % 2 == 0 ? 1 : -1);
    if (partner == g) {
      if (m % 2 == 1) label.lambda.push_back(g.degree() / 2);
      for (int i = 0; i < m / 2; ++i) label.mu.push_back(g.degree());
    } else if (g < partner) {
      for (int i = 0; i < m; ++i) label.mu.push_back(g.degree());
    }
  }
  label.lambda = canonical_partition(std::move(label.lambda));
  label.mu = canonical_partition(std::move(label.mu));
  return label;
}

int integer_mobius(int n) {
  if (n < 1) throw InputError("Mobius function needs a positive argument");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

QPoly necklace_polynomial(int d) {
  if (d < 1) throw InputError("necklace degree must be positive");
  QPoly p;
  for (int e = 1; e <= d; ++e) {
    if (d % e == 0) p = p + QPoly::monomial(Rat(integer_mobius(e)), d / e);
  }
  return p * Rat(1, d);
}

QPoly count_by_type(int n, const Partition& lambda) {
  if (weight(lambda) != n) throw InputError("partition weight does not match n");
  std::map<int, int> a;
  for (int part : lambda) {
    if (part < 1) throw InputError("partition parts must be positive");
    ++a[part];
  }
  QPoly result = QPoly::constant(Rat(1));
  for (const auto& [d, count] : a) {
    const QPoly m = necklace_polynomial(d);
    // multichoose(M, a) = M (M+1) ... (M+a-1) / a!
    QPoly term = QPoly::constant(Rat(1));
    for (int i = 0; i < count; ++i) term = term * (m + QPoly::constant(Rat(i))) * Rat(1, i + 1);
    result = result * term;
  }
  return result;
}

const ExtField& RootFinder::field(int k) {
  auto it = fields_.find(k);
  if (it == fields_.end()) it = fields_.emplace(k, ExtField(sieve_->q(), k)).first;
  return it->second;
}

const std::vector<ExtField::Elem>& RootFinder::roots(const FqPoly& g, int k) {
  if (g.degree() < 1 || k % g.degree() != 0) throw InputError("irreducible degree must divide the extension degree");
  const auto key = std::make_pair(k, g.coeffs());
  auto it = roots_.find(key);
  if (it != roots_.end()) return it->second;
  const ExtField& f = field(k);
  std::vector<ExtField::Elem> found;
  for (std::uint64_t code = 0; code < f.size(); ++code) {
    ExtField::Elem x = f.element(code);
    if (f.evaluate(g, x) == f.zero()) found.push_back(std::move(x));
  }
  if (static_cast<int>(found.size()) != g.degree()) throw std::logic_error("irreducible does not split in the extension");
  return roots_.emplace(key, std::move(found)).first->second;
}

OrbitLift RootFinder::lift(Family family, const FqPoly& f) {
  const std::vector<FqPoly> factors = factor_monic(f, *sieve_);
  int k = 1;
  for (const auto& g : factors) k = std::lcm(k, g.degree());
  const ExtField& fld = field(k);
  std::vector<ExtField::Elem> all;
  for (const auto& g : factors) {
    const auto& r = roots(g, k);
    all.insert(all.end(), r.begin(), r.end());
  }
  std::sort(all.begin(), all.end(), [&](const auto& x, const auto& y) { return fld.encode(x) < fld.encode(y); });
  if (family == Family::A) return OrbitLift{&fld, std::move(all)};

  if (!is_even(f)) throw InputError("type B lift needs an even polynomial");
  std::vector<ExtField::Elem> y;
  std::size_t zeros = 0;
  for (const auto& r : all) {
    if (r == fld.zero()) {
      ++zeros;
    } else if (fld.encode(r) < fld.encode(fld.neg(r))) {
      y.push_back(r);
    }
  }
  for (std::size_t i = 0; i < zeros / 2; ++i) y.insert(y.begin(), fld.zero());
  if (2 * y.size() != all.size()) throw std::logic_error("roots of an even polynomial do not pair up");
  return OrbitLift{&fld, std::move(y)};
}

}  // namespace hyparr
