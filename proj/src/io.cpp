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

#include "hyparr/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

Rat rat_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(mpz_class(j.dump()));
  throw InputError(what + " must be a rational string");
}

int parse_positive(const std::string& s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) throw InputError(what + " must be a positive integer");
  return v;
}

Json partition_json(const Partition& p) {
  Json a = Json::array();
  for (int x : p) a.push_back(x);
  return a;
}

Partition partition_from(const Json& j) {
  if (!j.is_array()) throw InputError("partition must be an array of positive integers");
  Partition p;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 1) throw InputError("partition parts must be positive integers");
    p.push_back(x.get<int>());
  }
  Partition c = canonical_partition(p);
  if (c != p) throw InputError("partition parts must be weakly decreasing");
  return c;
}

}  // namespace

Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("hyperplanes")) {
    throw InputError("arrangement JSON needs \"dim\" and \"hyperplanes\"");
  }
  if (!j["dim"].is_number_integer()) throw InputError("\"dim\" must be an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw InputError("\"dim\" must be at least 1");
  if (!j["hyperplanes"].is_array()) throw InputError("\"hyperplanes\" must be an array");
  std::vector<Hyperplane> hs;
  for (const auto& h : j["hyperplanes"]) {
    if (!h.is_object() || !h.contains("normal") || !h["normal"].is_array()) {
      throw InputError("hyperplane needs a \"normal\" array");
    }
    QVec normal;
    for (const auto& x : h["normal"]) normal.push_back(rat_from_json(x, "normal entry"));
    if (static_cast<int>(normal.size()) != dim) {
      throw InputError("hyperplane " + std::to_string(hs.size()) + " has normal of length " +
                       std::to_string(normal.size()) + ", expected " + std::to_string(dim));
    }
    const Rat offset = h.contains("offset") ? rat_from_json(h["offset"], "offset") : Rat(0);
    hs.push_back(Hyperplane{std::move(normal), offset});
  }
  return Arrangement(dim, std::move(hs));
}

Json arrangement_to_json(const Arrangement& a) {
  Json hs = Json::array();
  for (const auto& h : a.hyperplanes()) {
    Json normal = Json::array();
    for (const auto& x : h.normal) normal.push_back(to_string(x));
    hs.push_back(Json{{"normal", normal}, {"offset", to_string(h.offset)}});
  }
  return Json{{"dim", a.dim()}, {"hyperplanes", hs}};
}

Arrangement parse_arrangement(const std::string& source) {
  const auto colon = source.find(':');
  if (colon != std::string::npos) {
    const std::string kind = source.substr(0, colon);
    if (kind == "braid" || kind == "typeB" || kind == "boolean") {
      const int n = parse_positive(source.substr(colon + 1), "builtin size");
      if (n > 8) throw InputError("builtin size must be at most 8");
      if (kind == "braid") return braid_arrangement(n);
      if (kind == "typeB") return type_b_arrangement(n);
      return boolean_arrangement(n);
    }
  }
  std::ifstream in(source);
  if (!in) throw InputError("cannot open arrangement file '" + source + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed arrangement JSON: ") + e.what());
  }
  return arrangement_from_json(j);
}

Json label_to_json(const ConjClassLabel& c) {
  Json j{{"lambda", partition_json(c.lambda)}};
  if (c.family == Family::B) j["mu"] = partition_json(c.mu);
  return j;
}

ConjClassLabel label_from_json(const Json& j, Family family) {
  if (!j.is_object() || !j.contains("lambda")) throw InputError("label needs \"lambda\"");
  ConjClassLabel c{family, partition_from(j["lambda"]), {}};
  if (j.contains("mu")) {
    if (family == Family::A) throw InputError("type A labels have no \"mu\"");
    c.mu = partition_from(j["mu"]);
  }
  return c;
}

Json class_function_to_json(const ClassFunction& f) {
  Json values = Json::array();
  for (const auto& [l, v] : f.values) values.push_back(Json{{"label", label_to_json(l)}, {"value", to_string(v)}});
  return Json{{"group", group_name(f.family, f.n)}, {"values", values}};
}

ClassFunction class_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j["group"].is_string() || !j.contains("values") ||
      !j["values"].is_array()) {
    throw InputError("class function JSON needs \"group\" and \"values\"");
  }
  const auto [family, n] = parse_group_name(j["group"].get<std::string>());
  ClassFunction f{family, n, {}};
  for (const auto& e : j["values"]) {
    if (!e.is_object() || !e.contains("label") || !e.contains("value")) {
      throw InputError("class function entries need \"label\" and \"value\"");
    }
    const ConjClassLabel l = label_from_json(e["label"], family);
    if (l.weight() != n) throw InputError("label " + to_string(l) + " has the wrong weight");
    if (!f.values.emplace(l, rat_from_json(e["value"], "value")).second) {
      throw InputError("label " + to_string(l) + " listed twice");
    }
  }
  f.validate();
  return f;
}

Json qpoly_to_json(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json sign_vector_to_json(const SignVector& s) { return to_string(s); }

Json subspace_to_json(const AffineSubspace& s) {
  Json eqs = Json::array();
  if (!s.is_empty()) {
    for (std::size_t r = 0; r < s.equations().rows(); ++r) {
      Json normal = Json::array();
      for (std::size_t c = 0; c < s.equations().cols(); ++c) normal.push_back(to_string(s.equations()(r, c)));
      eqs.push_back(Json{{"normal", normal}, {"offset", to_string(s.rhs()[r])}});
    }
  }
  Json j{{"ambient_dim", s.ambient_dim()}, {"empty", s.is_empty()}};
  if (!s.is_empty()) j["dim"] = s.dim();
  j["equations"] = eqs;
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"details", c.details}});
  }
  Json primes = Json::array();
  for (int q : r.plan.primes) primes.push_back(q);
  return Json{{"family", family_name(r.family)}, {"n", r.n},          {"seed", r.seed},
              {"primes", primes},                {"holdout", r.plan.holdout}, {"checks", checks},
              {"pass", r.pass}};
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  throw InputError("family must be A or B, got '" + s + "'");
}

std::pair<Family, int> parse_group_name(const std::string& s) {
  if (s.size() < 2) throw InputError("group name must look like A3 or B2");
  return {parse_family(s.substr(0, 1)), parse_positive(s.substr(1), "group rank")};
}

}  // namespace hyparr
