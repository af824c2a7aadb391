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

#include "hyparr/finite_field.hpp"

#include <sstream>
#include <stdexcept>

#include "hyparr/error.hpp"

namespace hyparr {

int mod_q(long long a, int q) {
  const long long r = a % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

int pow_mod(long long a, long long e, int q) {
  long long base = mod_q(a, q);
  long long r = 1 % q;
  while (e > 0) {
    if (e & 1) r = r * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int inv_mod(int a, int q) {
  if (mod_q(a, q) == 0) throw std::invalid_argument("zero has no inverse");
  return pow_mod(a, q - 2, q);
}

FqPoly::FqPoly(int q, std::vector<int> coeffs) : q_(q), c_(std::move(coeffs)) {
  if (q < 2) throw InputError("field characteristic must be prime");
  for (auto& x : c_) x = mod_q(x, q_);
  trim();
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::monic_from_code(int q, int degree, std::uint64_t code) {
  std::vector<int> c(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  c.back() = 1;
  return FqPoly(q, std::move(c));
}

std::uint64_t FqPoly::code() const {
  std::uint64_t code = 0;
  for (int i = degree() - 1; i >= 0; --i) code = code * static_cast<std::uint64_t>(q_) + static_cast<std::uint64_t>(c_[static_cast<std::size_t>(i)]);
  return code;
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  std::vector<int> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return FqPoly(q_, std::move(c));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
  std::vector<int> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return FqPoly(q_, std::move(c));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  if (c_.empty() || o.c_.empty()) return FqPoly(q_, {});
  std::vector<long long> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = (c[i + j] + static_cast<long long>(c_[i]) * o.c_[j]) % q_;
  }
  return FqPoly(q_, std::vector<int>(c.begin(), c.end()));
}

FqPoly FqPoly::scaled(int s) const {
  std::vector<int> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_q(static_cast<long long>(c_[i]) * s, q_);
  return FqPoly(q_, std::move(c));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  const int q = a.q_;
  std::vector<int> r = a.c_;
  const int db = b.degree();
  const int inv_lead = inv_mod(b.c_.back(), q);
  std::vector<int> quo(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), 0);
  for (int i = a.degree(); i >= db; --i) {
    const int c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const int f = static_cast<int>(static_cast<long long>(c) * inv_lead % q);
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto& x = r[static_cast<std::size_t>(i - db + j)];
      x = mod_q(x - static_cast<long long>(f) * b.c_[static_cast<std::size_t>(j)], q);
    }
  }
  return {FqPoly(q, std::move(quo)), FqPoly(q, std::move(r))};
}

FqPoly FqPoly::monic() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no monic normalization");
  return scaled(inv_mod(c_.back(), q_));
}

FqPoly FqPoly::negated_variable() const {
  std::vector<int> c = c_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = mod_q(-c[i], q_);
  return FqPoly(q_, std::move(c));
}

int FqPoly::evaluate(int x) const {
  long long r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (r * x + *it) % q_;
  return mod_q(r, q_);
}

bool FqPoly::operator<(const FqPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
  }
  return false;
}

std::string FqPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const int c = coeff(i);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) os << (c != 1 ? "*" : "") << "t";
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

bool is_irreducible_naive(const FqPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  const int q = f.q();
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(q);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (FqPoly::divmod(f, FqPoly::monic_from_code(q, d, code)).second.is_zero()) return false;
    }
  }
  return true;
}

ExtField::ExtField(int q, int k) : q_(q), k_(k), size_(1) {
  if (k < 1) throw InputError("extension degree must be positive");
  for (int i = 0; i < k; ++i) size_ *= static_cast<std::uint64_t>(q);
  for (std::uint64_t code = 0;; ++code) {
    FqPoly m = FqPoly::monic_from_code(q, k, code);
    if (is_irreducible_naive(m)) {
      modulus_ = std::move(m);
      break;
    }
  }
}

ExtField::Elem ExtField::from_base(int c) const {
  Elem e = zero();
  e[0] = mod_q(c, q_);
  return e;
}

ExtField::Elem ExtField::element(std::uint64_t code) const {
  Elem e = zero();
  for (auto& x : e) {
    x = static_cast<int>(code % static_cast<std::uint64_t>(q_));
    code /= static_cast<std::uint64_t>(q_);
  }
  return e;
}

std::uint64_t ExtField::encode(const Elem& e) const {
  std::uint64_t code = 0;
  for (auto it = e.rbegin(); it != e.rend(); ++it) code = code * static_cast<std::uint64_t>(q_) + static_cast<std::uint64_t>(*it);
  return code;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % q_;
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_q(a[i] - b[i], q_);
  return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_q(-a[i], q_);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  const std::size_t k = static_cast<std::size_t>(k_);
  std::vector<long long> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + static_cast<long long>(a[i]) * b[j]) % q_;
  }
  // Reduce with the monic modulus: t^k = -(m_0 + ... + m_{k-1} t^{k-1}).
  for (std::size_t i = prod.size(); i-- > k;) {
    const long long c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      prod[i - k + j] = mod_q(prod[i - k + j] - c * modulus_.coeff(static_cast<int>(j)), q_);
    }
    prod[i] = 0;
  }
  Elem r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<int>(prod[i]);
  return r;
}

ExtField::Elem ExtField::pow(Elem a, std::uint64_t e) const {
  Elem r = from_base(1);
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

ExtField::Elem ExtField::evaluate(const FqPoly& f, const Elem& x) const {
  Elem r = zero();
  for (int i = f.degree(); i >= 0; --i) r = add(mul(r, x), from_base(f.coeff(i)));
  return r;
}

std::string ExtField::to_string(const Elem& a) const {
  return FqPoly(q_, a).to_string();
}

}  // namespace hyparr
