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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyparr/arrangement.hpp"
#include "hyparr/characters.hpp"
#include "hyparr/error.hpp"
#include "hyparr/factstats.hpp"
#include "hyparr/hyde.hpp"
#include "hyparr/io.hpp"
#include "hyparr/posets.hpp"
#include "hyparr/validorder.hpp"
#include "hyparr/weyl.hpp"

using namespace hyparr;

namespace {

struct Options {
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
  std::string arrangement;
  std::string dot;
  std::string kind = "strat";
  int q = 0;
  int n = 0;
  std::string family = "A";
  std::string op = "inertia";
  std::string character = "trivial";
  std::string chi_file;
  std::vector<int> primes;
  int holdout = 0;
  bool list_types = false;
};

void apply_env(Options& o) {
  if (const char* s = std::getenv("HYPARR_SEED")) {
    try {
      o.seed = std::stoull(s);
    } catch (const std::exception&) {
      throw InputError("HYPARR_SEED must be a nonnegative integer");
    }
  }
  if (const char* t = std::getenv("HYPARR_THREADS")) {
    try {
      o.threads = std::stoi(t);
    } catch (const std::exception&) {
      throw InputError("HYPARR_THREADS must be a positive integer");
    }
  }
}

void emit(const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

Json int_list(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json census_json(const std::map<int, std::int64_t>& census) {
  Json j = Json::object();
  for (auto it = census.rbegin(); it != census.rend(); ++it) j[std::to_string(it->first)] = it->second;
  return j;
}

Json betti_json(const std::vector<std::int64_t>& b) {
  Json a = Json::array();
  for (auto x : b) a.push_back(x);
  return a;
}

int cmd_chambers(const Options& o) {
  const Arrangement a = parse_arrangement(o.arrangement);
  Json list = Json::array();
  const auto chambers = enumerate_chambers(a);
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    Json w = Json::array();
    for (const auto& x : chambers[i].witness) w.push_back(to_string(x));
    list.push_back(Json{{"id", i}, {"signs", to_string(chambers[i].signs)}, {"witness", w}});
  }
  emit(o, Json{{"dim", a.dim()}, {"hyperplanes", a.size()}, {"count", chambers.size()}, {"chambers", list}});
  return 0;
}

std::vector<std::string> flat_labels(const FlatsPoset& flats) {
  std::vector<std::string> labels;
  for (const auto& f : flats.flats) labels.push_back("{" + [&] {
    std::string s;
    for (int h : members(f.supp)) s += (s.empty() ? "" : ",") + std::to_string(h);
    return s;
  }() + "}");
  return labels;
}

int cmd_flats(const Options& o) {
  const Arrangement a = parse_arrangement(o.arrangement);
  const FlatsPoset flats = enumerate_flats(a);
  Json list = Json::array();
  for (int k = 0; k < flats.size(); ++k) {
    const Flat& f = flats.flats[static_cast<std::size_t>(k)];
    list.push_back(Json{{"id", k},
                        {"dim", f.subspace.dim()},
                        {"supp", int_list(members(f.supp))},
                        {"mobius", to_string(flats.mobius[static_cast<std::size_t>(k)])},
                        {"subspace", subspace_to_json(f.subspace)}});
  }
  if (!o.dot.empty()) write_file(o.dot, to_dot("flats", flat_labels(flats), flats_order(flats)));
  emit(o, Json{{"count", flats.size()}, {"flats", list}});
  return 0;
}

int cmd_posets(const Options& o) {
  const Arrangement a = parse_arrangement(o.arrangement);
  const FlatsPoset flats = enumerate_flats(a);
  Json j{{"kind", o.kind}};
  std::vector<std::string> labels;
  PartialOrder order;
  if (o.kind == "flats") {
    labels = flat_labels(flats);
    order = flats_order(flats);
  } else if (o.kind == "strat") {
    const StratPoset p = build_strat_poset(a, flats);
    for (const auto& e : p.elements) labels.push_back("K" + std::to_string(e.flat) + " " + to_string(e.chamber));
    order = p.order;
  } else if (o.kind == "salvetti") {
    const SalvettiPoset p = build_salvetti_poset(a, flats);
    for (const auto& e : p.elements) {
      labels.push_back(to_string(p.faces[static_cast<std::size_t>(e.face)].signs) + " " + to_string(e.chamber));
    }
    order = p.order;
    j["faces"] = p.faces.size();
  } else {
    throw InputError("--kind must be flats, strat or salvetti");
  }
  j["elements"] = order.size();
  j["covers"] = order.covers().size();
  j["euler_characteristic"] = to_string(order.order_complex_euler_characteristic());
  if (!o.dot.empty()) write_file(o.dot, to_dot(o.kind, labels, order));
  emit(o, j);
  return 0;
}

int cmd_valid_order(const Options& o) {
  const ArrangementData d(parse_arrangement(o.arrangement));
  const ValidOrder vo = find_valid_order(d, o.seed);
  const CellDecomposition cd = cell_decomposition(d, vo);
  Json dims = Json::array();
  for (const auto& s : vo.star_flats) dims.push_back(s.dim());
  emit(o, Json{{"seed", o.seed}, {"order", int_list(vo.order)}, {"star_dims", dims}, {"census", census_json(cd.census)}});
  return 0;
}

int cmd_cells(const Options& o) {
  const ArrangementData d(parse_arrangement(o.arrangement));
  const CellDecomposition cd = cell_decomposition(d, find_valid_order(d, o.seed));
  Json cells = Json::array();
  for (const auto& c : cd.cells) {
    cells.push_back(Json{{"chamber", c.chamber}, {"dim", c.dim}, {"flat", subspace_to_json(c.flat)}});
  }
  emit(o, Json{{"seed", o.seed}, {"census", census_json(cd.census)}, {"cells", cells}});
  return 0;
}

int cmd_betti(const Options& o) {
  const ArrangementData d(parse_arrangement(o.arrangement));
  const CellDecomposition cd = cell_decomposition(d, find_valid_order(d, o.seed));
  const auto cells = betti_from_cells(cd, d.a.dim());
  const auto whitney = whitney_betti(d.a, d.flats);
  emit(o, Json{{"seed", o.seed}, {"cells", betti_json(cells)}, {"whitney", betti_json(whitney)}, {"agree", cells == whitney}});
  return cells == whitney ? 0 : 1;
}

int cmd_points(const Options& o) {
  const Arrangement a = parse_arrangement(o.arrangement);
  emit(o, Json{{"q", o.q}, {"count", count_points_XA(a, o.q)}});
  return 0;
}

int cmd_weyl(const Options& o) {
  const WeylGroup g(parse_family(o.family), o.n);
  Json j{{"group", group_name(g.family(), g.n())}, {"op", o.op}};
  if (o.op == "inertia") {
    j["polynomial"] = qpoly_to_json(inertia_polynomial(g));
  } else if (o.op == "exponents") {
    j["exponents"] = int_list(g.exponents());
  } else if (o.op == "classes") {
    Json list = Json::array();
    for (const auto& [l, size] : class_sizes(g)) list.push_back(Json{{"label", label_to_json(l)}, {"size", size}});
    j["order"] = g.order();
    j["classes"] = list;
  } else if (o.op == "arrangement") {
    j["arrangement"] = arrangement_to_json(reflection_arrangement(g));
  } else {
    throw InputError("--op must be inertia, exponents, classes or arrangement");
  }
  emit(o, j);
  return 0;
}

int cmd_factstats(const Options& o) {
  const Family family = parse_family(o.family);
  if (!o.list_types) throw InputError("factstats needs --list-types");
  const Census census = factorization_census(family, o.n, o.q, o.threads);
  Json rows = Json::array();
  for (const auto& [l, count] : census) {
    Json row{{"label", label_to_json(l)}, {"count", count}};
    if (family == Family::A) row["formula"] = to_string(count_by_type(o.n, l.lambda)(Rat(o.q)));
    rows.push_back(row);
  }
  emit(o, Json{{"family", o.family}, {"q", o.q}, {"n", o.n}, {"types", rows}});
  return 0;
}

ClassFunction load_character(const Options& o, Family family) {
  if (!o.chi_file.empty()) {
    std::ifstream in(o.chi_file);
    if (!in) throw InputError("cannot open '" + o.chi_file + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed class function JSON: ") + e.what());
    }
    ClassFunction f = class_function_from_json(j);
    if (f.family != family || f.n != o.n) throw InputError("class function is for a different group");
    return f;
  }
  if (o.character == "trivial") return trivial_character(family, o.n);
  if (o.character == "regular") return regular_character(family, o.n);
  if (family == Family::A && o.character == "sign") {
    return sn_irreducible_character(Partition(static_cast<std::size_t>(o.n), 1));
  }
  if (family == Family::B) {
    for (auto& [name, chi] : b_builtin_characters(o.n)) {
      if (name == o.character) return chi;
    }
  }
  throw InputError("unknown character '" + o.character + "'");
}

int cmd_hyde_verify(const Options& o) {
  SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.primes = o.primes;
  cfg.holdout = o.holdout;
  cfg.threads = o.threads;
  const VerificationReport r = run_verification_suite(parse_family(o.family), o.n, cfg);
  for (const auto& c : r.checks) {
    std::cerr << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.seconds << " s)\n";
  }
  emit(o, report_to_json(r));
  return r.pass ? 0 : 1;
}

int cmd_hyde_extract(const Options& o) {
  const Family family = parse_family(o.family);
  const ClassFunction chi = load_character(o, family);
  CensusCache cache(o.threads);
  const Extraction e = extract_multiplicities(family, o.n, chi, plan_primes(family, o.n, o.primes, o.holdout), cache);
  Json m = Json::array();
  for (const auto& x : e.multiplicities) m.push_back(to_string(x));
  emit(o, Json{{"lhs", qpoly_to_json(e.lhs)}, {"multiplicities", m}, {"primes", int_list(e.plan.primes)},
               {"holdout", e.plan.holdout}});
  return 0;
}

int cmd_hyde_poincare(const Options& o) {
  const Family family = parse_family(o.family);
  CensusCache cache(o.threads);
  const EquivariantPoincare ep = equivariant_poincare(family, o.n, plan_primes(family, o.n, o.primes, o.holdout), cache);
  Json table = Json::array();
  for (std::size_t i = 0; i < ep.table.size(); ++i) {
    table.push_back(Json{{"degree", 2 * i}, {"character", class_function_to_json(ep.table[i])}});
  }
  emit(o, Json{{"group", group_name(family, o.n)}, {"table", table}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  try {
    apply_env(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  CLI::App app{"Hyperplane arrangements, valid orders and factorization statistics"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Random seed (env HYPARR_SEED)");
  app.add_option("--threads", o.threads, "Worker threads (env HYPARR_THREADS)")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Write JSON here instead of stdout");

  auto arrangement_opt = [&](CLI::App* sub) {
    sub->add_option("--arrangement", o.arrangement, "JSON file or braid:n, typeB:n, boolean:n")->required();
  };
  auto* chambers = app.add_subcommand("chambers", "List chambers with witnesses");
  arrangement_opt(chambers);
  auto* flats = app.add_subcommand("flats", "Intersection poset with Mobius values");
  arrangement_opt(flats);
  flats->add_option("--dot", o.dot, "Write the Hasse diagram as DOT");
  auto* posets = app.add_subcommand("posets", "Strat, Salvetti or flats poset");
  arrangement_opt(posets);
  posets->add_option("--kind", o.kind, "strat, salvetti or flats");
  posets->add_option("--dot", o.dot, "Write the Hasse diagram as DOT");
  auto* valid = app.add_subcommand("valid-order", "Certified valid order of the chambers");
  arrangement_opt(valid);
  auto* cells = app.add_subcommand("cells", "Algebraic cell decomposition");
  arrangement_opt(cells);
  auto* betti = app.add_subcommand("betti", "Betti numbers from cells and from the Mobius function");
  arrangement_opt(betti);
  auto* points = app.add_subcommand("points", "Count F_q-points of X_A");
  arrangement_opt(points);
  points->add_option("--q", o.q, "Prime")->required();
  auto* weyl = app.add_subcommand("weyl", "Weyl group queries");
  weyl->add_option("--family", o.family, "A or B");
  weyl->add_option("--n", o.n, "Rank")->required();
  weyl->add_option("--op", o.op, "inertia, exponents, classes or arrangement");
  auto* fact = app.add_subcommand("factstats", "Factorization type census");
  fact->add_option("--family", o.family, "A or B");
  fact->add_option("--q", o.q, "Prime")->required();
  fact->add_option("--n", o.n, "Degree (type B: half the degree)")->required();
  fact->add_flag("--list-types", o.list_types, "Emit the census table");
  auto* hyde = app.add_subcommand("hyde", "Factorization statistics versus equivariant cohomology");
  hyde->require_subcommand(1);
  auto hyde_common = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "A or B");
    sub->add_option("--n", o.n, "Rank")->required();
    sub->add_option("--primes", o.primes, "Interpolation primes")->delimiter(',');
    sub->add_option("--holdout", o.holdout, "Held-out prime");
  };
  auto* verify = hyde->add_subcommand("verify", "Run the verification suite");
  hyde_common(verify);
  auto* extract = hyde->add_subcommand("extract", "Multiplicities of one class function");
  hyde_common(extract);
  extract->add_option("--character", o.character, "trivial, regular, sign or a type B builtin");
  extract->add_option("--chi", o.chi_file, "Class function JSON file");
  auto* poincare = hyde->add_subcommand("poincare", "Equivariant Poincare table");
  hyde_common(poincare);
  for (auto* sub : {chambers, flats, posets, valid, cells, betti, points, weyl, fact, verify, extract, poincare}) {
    sub->fallthrough();
  }
  hyde->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*chambers) return cmd_chambers(o);
    if (*flats) return cmd_flats(o);
    if (*posets) return cmd_posets(o);
    if (*valid) return cmd_valid_order(o);
    if (*cells) return cmd_cells(o);
    if (*betti) return cmd_betti(o);
    if (*points) return cmd_points(o);
    if (*weyl) return cmd_weyl(o);
    if (*fact) return cmd_factstats(o);
    if (*verify) return cmd_hyde_verify(o);
    if (*extract) return cmd_hyde_extract(o);
    if (*poincare) return cmd_hyde_poincare(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
