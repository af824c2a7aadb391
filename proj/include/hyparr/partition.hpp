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

#include <compare>
#include <string>
#include <vector>

namespace hyparr {

enum class Family { A, B };

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

Partition canonical_partition(Partition p);
int weight(const Partition& p);
// Partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);
std::string to_string(const Partition& p);

// Type A uses only lambda (the cycle type). Type B: lambda collects the
// Z/2-invariant blocks, mu the swapped pairs.
struct ConjClassLabel {
  Family family = Family::A;
  Partition lambda;
  Partition mu;

  int weight() const;
  auto operator<=>(const ConjClassLabel&) const = default;
  bool operator==(const ConjClassLabel&) const = default;
};

std::string to_string(const ConjClassLabel& c);
std::string family_name(Family f);
// "A3", "B2".
std::string group_name(Family f, int n);

// Every label of the given weight, sorted.
std::vector<ConjClassLabel> all_labels(Family f, int n);
ConjClassLabel identity_label(Family f, int n);

}  // namespace hyparr
