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

#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyparr {

using Integer = mpz_class;
// mpq_class keeps numerator and denominator coprime with a positive
// denominator after every operation, so values are always canonical.
using Rat = mpq_class;
using QVec = std::vector<Rat>;

// "p/q" or "p"; the canonical form round-trips through parse_rat.
std::string to_string(const Rat& r);
std::string to_string(const Integer& z);

// Accepts an optional sign, decimal digits, and an optional "/digits"
// denominator. Throws InputError on anything else or a zero denominator.
Rat parse_rat(std::string_view text);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);

// Smallest positive integer m such that m*v is integral.
Integer denominator_lcm(std::span<const Rat> v);
// gcd of the numerators of an integral vector, 0 for the zero vector.
Integer content(std::span<const Rat> v);

}  // namespace hyparr
