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

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

// Antichain of flats, stored as indices into a FlatsPoset.
struct UnionOfFlats {
  std::vector<int> flat_ids;

  bool is_single() const { return flat_ids.size() == 1; }
  std::vector<AffineSubspace> maximal_flats(const FlatsPoset& flats) const;
};

struct ValidOrder {
  std::vector<int> order;               // chamber ids
  std::vector<int> star_flat_ids;       // S_i as flat indices
  std::vector<AffineSubspace> star_flats;
};

struct OrderCheck {
  bool valid = false;
  std::optional<ValidOrder> certificate;
  std::optional<int> failing_index;  // 0-based position in the order
};

// Context shared by the operations below.
struct ArrangementData {
  explicit ArrangementData(Arrangement arrangement);
  Arrangement a;
  std::vector<Chamber> chambers;
  FlatsPoset flats;
};

// Throws InputError unless `order` is a permutation of the chamber ids.
std::vector<UnionOfFlats> star_set_sequence(const ArrangementData& d, const std::vector<int>& order);
OrderCheck verify_valid_order(const ArrangementData& d, const std::vector<int>& order);

struct ValidOrderOptions {
  int retry_budget = 16;
  int projection_sweeps = 4000;
};

// Approximate euclidean distance from x0 to the closed chamber.
double chamber_distance(const Arrangement& a, const Chamber& c, const std::vector<double>& x0,
                        int max_sweeps);

// Chamber ids sorted by distance from x0; ties within 1e-9 broken by id.
std::vector<int> distance_order(const ArrangementData& d, const std::vector<double>& x0, int max_sweeps);

// Throws VerificationFailure when the retry budget is exhausted.
ValidOrder find_valid_order(const ArrangementData& d, std::uint64_t seed, const ValidOrderOptions& opt = {});

struct Cell {
  int chamber;
  AffineSubspace flat;
  int dim;
};

struct CellDecomposition {
  std::vector<Cell> cells;
  std::map<int, std::int64_t> census;  // dimension -> count
};

// Re-certifies `vo`; throws InputError if it is not a valid order.
CellDecomposition cell_decomposition(const ArrangementData& d, const ValidOrder& vo);

// b_0, b_2, ..., with trailing zeros dropped (at least one entry).
std::vector<std::int64_t> betti_from_cells(const CellDecomposition& cd, int n);
std::vector<std::int64_t> whitney_betti(const Arrangement& a, const FlatsPoset& flats);

}  // namespace hyparr
