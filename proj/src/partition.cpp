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

#include "hyparr/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace hyparr {

Partition canonical_partition(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

int ConjClassLabel::weight() const { return hyparr::weight(lambda) + hyparr::weight(mu); }

std::string to_string(const ConjClassLabel& c) {
  if (c.family == Family::A) return to_string(c.lambda);
  return "(" + to_string(c.lambda) + "," + to_string(c.mu) + ")";
}

std::string family_name(Family f) { return f == Family::A ? "A" : "B"; }

std::string group_name(Family f, int n) { return family_name(f) + std::to_string(n); }

std::vector<ConjClassLabel> all_labels(Family f, int n) {
  std::vector<ConjClassLabel> out;
  if (f == Family::A) {
    for (auto& p : partitions_of(n)) out.push_back({f, std::move(p), {}});
  } else {
    for (int k = 0; k <= n; ++k) {
      for (const auto& l : partitions_of(k)) {
        for (const auto& m : partitions_of(n - k)) out.push_back({f, l, m});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConjClassLabel identity_label(Family f, int n) {
  Partition ones(static_cast<std::size_t>(n), 1);
  if (f == Family::A) return {f, ones, {}};
  return {f, {}, ones};
}

}  // namespace hyparr
