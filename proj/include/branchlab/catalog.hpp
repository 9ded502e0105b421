// Pair catalog: versioned JSON documents describing symmetric pairs (ambient
// type, grading, involution data, positive systems, admissibility verdicts,
// parameter conventions) plus the built-in entries. Admissibility is recorded
// data with a provenance string, not a computed criterion.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <branchlab/sympair.hpp>

namespace branchlab {

enum class Admissibility { yes, no, unknown };

struct ParamSpec {
  std::string style;               // "affine" or "coords"
  std::vector<std::string> flags;  // affine: one flag per step
  QVec base;                       // ambient coordinates
  std::vector<QVec> steps;
};

class CatalogEntry {
 public:
  std::string id;
  std::string provenance;
  std::shared_ptr<const SymmetricPair> pair;
  std::vector<std::string> system_ids;
  std::string default_system_id;
  std::set<std::string> admissible;
  ParamSpec params;
  std::vector<QVec> render_basis;  // empty: render raw coordinates

  const PositiveSystem& system(const std::string& sid) const {
    auto it = systems_.find(sid);
    if (it == systems_.end())
      throw std::invalid_argument(id + ": unknown positive system '" + sid + "'");
    return it->second;
  }
  const PositiveSystem& default_system() const { return system(default_system_id); }

  Admissibility admissibility(const std::string& sid) const {
    if (systems_.find(sid) == systems_.end()) return Admissibility::unknown;
    return admissible.count(sid) ? Admissibility::yes : Admissibility::no;
  }

  // Positive systems induced on the restricted root data.
  PositiveSystem h_system(const std::string& sid) const {
    return pair->induced_system(pair->h_datum(), system(sid));
  }
  PositiveSystem h0_system(const std::string& sid) const {
    return pair->induced_system(pair->h0_datum(), system(sid));
  }

  // Harish-Chandra parameter from named CLI flags (affine style only).
  QVec hc_from_flags(const std::map<std::string, Rat>& values) const {
    if (params.style != "affine")
      throw std::invalid_argument(id + ": takes a coordinate parameter, not named flags");
    QVec v = params.base;
    for (size_t i = 0; i < params.flags.size(); ++i) {
      auto it = values.find(params.flags[i]);
      if (it == values.end())
        throw std::invalid_argument(id + ": missing parameter --" + params.flags[i]);
      v = v + it->second * params.steps[i];
    }
    return v;
  }

  void add_system(const std::string& sid, PositiveSystem ps) {
    systems_.emplace(sid, std::move(ps));
  }

 private:
  std::map<std::string, PositiveSystem> systems_;
};

namespace catalog_detail {

inline Rat json_rat(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw std::invalid_argument(where + ": expected integer or \"p/q\" string");
}

inline QVec json_vec(const nlohmann::json& j, const RootDatum& rd, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + ": expected {basis, coords}");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "basis" && it.key() != "coords")
      throw std::invalid_argument(where + ": unknown field '" + it.key() + "'");
  if (!j.contains("basis") || !j.contains("coords"))
    throw std::invalid_argument(where + ": expected {basis, coords}");
  std::string basis = j.at("basis").get<std::string>();
  QVec c;
  for (const auto& x : j.at("coords")) c.push_back(json_rat(x, where));
  if (basis == "ambient") {
    if (c.size() != rd.dim()) throw std::invalid_argument(where + ": ambient size");
    return c;
  }
  if (basis == "simple") {
    if (c.size() != rd.rank()) throw std::invalid_argument(where + ": simple size");
    return rd.from_simple_coords(c);
  }
  throw std::invalid_argument(where + ": basis must be 'ambient' or 'simple'");
}

inline void check_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                       const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument(where + ": unknown field '" + it.key() + "'");
}

}  // namespace catalog_detail

class Catalog {
 public:
  static Catalog from_json(const std::string& text) {
    Catalog c;
    c.merge_json(text, "catalog");
    return c;
  }

  static Catalog builtin();

  // Built-in entries plus any files named by BRANCHLAB_CATALOG
  // (colon-separated paths).
  static Catalog load() {
    Catalog c = builtin();
    const char* env = std::getenv("BRANCHLAB_CATALOG");
    if (env && *env) {
      std::string paths(env);
      size_t start = 0;
      while (start <= paths.size()) {
        size_t colon = paths.find(':', start);
        std::string path = paths.substr(start, colon == std::string::npos ? std::string::npos
                                                                          : colon - start);
        if (!path.empty()) c.merge_file(path);
        if (colon == std::string::npos) break;
        start = colon + 1;
      }
    }
    return c;
  }

  void merge_file(const std::string& path);
  void merge_json(const std::string& text, const std::string& where);

  const CatalogEntry* find(const std::string& id) const {
    for (const auto& e : entries_)
      if (e.id == id) return &e;
    return nullptr;
  }
  const CatalogEntry& at(const std::string& id) const {
    const CatalogEntry* e = find(id);
    if (!e) throw std::invalid_argument("unknown pair '" + id + "'; see the catalog listing");
    return *e;
  }
  const std::vector<CatalogEntry>& entries() const { return entries_; }

 private:
  std::vector<CatalogEntry> entries_;

  void add_entry(const nlohmann::json& p, const std::string& where);
};

inline void Catalog::merge_json(const std::string& text, const std::string& where) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(where + ": not valid JSON: " + e.what());
  }
  catalog_detail::check_keys(doc, {"version", "pairs"}, where);
  if (!doc.contains("version") || !doc.at("version").is_number_integer() ||
      doc.at("version").get<int>() != 1)
    throw std::invalid_argument(where + ": missing or unsupported version (need 1)");
  if (!doc.contains("pairs") || !doc.at("pairs").is_array())
    throw std::invalid_argument(where + ": 'pairs' array required");
  for (const auto& p : doc.at("pairs")) add_entry(p, where);
}

inline void Catalog::merge_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::invalid_argument("catalog file not readable: " + path);
  std::string text;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
  std::fclose(f);
  merge_json(text, path);
}

inline void Catalog::add_entry(const nlohmann::json& p, const std::string& where) {
  using catalog_detail::check_keys;
  using catalog_detail::json_rat;
  using catalog_detail::json_vec;
  check_keys(p,
             {"id", "factors", "grading", "sigma", "systems", "default_system", "admissible",
              "params", "render_basis", "provenance"},
             where);
  for (const char* field : {"id", "factors", "grading", "sigma", "systems", "default_system",
                            "admissible", "params", "provenance"})
    if (!p.contains(field))
      throw std::invalid_argument(where + ": pair entry missing '" + std::string(field) + "'");

  CatalogEntry e;
  e.id = p.at("id").get<std::string>();
  std::string ctx = where + ", pair " + e.id;
  if (find(e.id)) throw std::invalid_argument(ctx + ": duplicate id");
  e.provenance = p.at("provenance").get<std::string>();

  std::vector<RootDatum> factors;
  for (const auto& f : p.at("factors")) {
    check_keys(f, {"type", "rank"}, ctx);
    factors.push_back(RootDatum::build(f.at("type").get<std::string>(), f.at("rank").get<size_t>()));
  }
  if (factors.empty()) throw std::invalid_argument(ctx + ": at least one factor");
  RootDatum rd = factors.size() == 1 ? factors[0] : RootDatum::product(factors);

  std::vector<int> grading;
  for (const auto& g : p.at("grading")) grading.push_back(g.get<int>());

  check_keys(p.at("sigma"), {"perm", "signs"}, ctx);
  std::vector<size_t> perm;
  for (const auto& x : p.at("sigma").at("perm")) {
    size_t v = x.get<size_t>();
    if (v < 1 || v > rd.rank()) throw std::invalid_argument(ctx + ": sigma.perm is 1-based");
    perm.push_back(v - 1);
  }
  std::vector<Rat> signs;
  for (const auto& x : p.at("sigma").at("signs")) signs.push_back(json_rat(x, ctx));

  QMatrix sig = involution_from_permutation(rd, perm);
  e.pair = std::make_shared<SymmetricPair>(rd, grading, sig, signs, e.id);

  for (const auto& s : p.at("systems")) {
    check_keys(s, {"id", "kind", "vector"}, ctx);
    std::string sid = s.at("id").get<std::string>();
    std::string kind = s.at("kind").get<std::string>();
    if (kind == "standard") {
      e.add_system(sid, PositiveSystem::standard(e.pair->ambient(), grading));
    } else if (kind == "vector") {
      QVec v = json_vec(s.at("vector"), e.pair->ambient(), ctx);
      e.add_system(sid, PositiveSystem::from_vector(e.pair->ambient(), grading, v));
    } else {
      throw std::invalid_argument(ctx + ": system kind must be 'standard' or 'vector'");
    }
    e.system_ids.push_back(sid);
  }
  e.default_system_id = p.at("default_system").get<std::string>();
  e.system(e.default_system_id);  // must exist
  for (const auto& a : p.at("admissible")) {
    std::string sid = a.get<std::string>();
    e.system(sid);
    e.admissible.insert(sid);
  }

  const auto& pp = p.at("params");
  check_keys(pp, {"style", "flags", "base", "steps"}, ctx);
  e.params.style = pp.at("style").get<std::string>();
  if (e.params.style == "affine") {
    for (const auto& f : pp.at("flags")) e.params.flags.push_back(f.get<std::string>());
    e.params.base = json_vec(pp.at("base"), e.pair->ambient(), ctx);
    for (const auto& s : pp.at("steps")) e.params.steps.push_back(json_vec(s, e.pair->ambient(), ctx));
    if (e.params.steps.size() != e.params.flags.size())
      throw std::invalid_argument(ctx + ": one step per flag");
  } else if (e.params.style == "coords") {
    if (pp.contains("flags") || pp.contains("base") || pp.contains("steps"))
      throw std::invalid_argument(ctx + ": coords style takes no flags/base/steps");
  } else {
    throw std::invalid_argument(ctx + ": params.style must be 'affine' or 'coords'");
  }

  if (p.contains("render_basis"))
    for (const auto& r : p.at("render_basis"))
      e.render_basis.push_back(json_vec(r, e.pair->ambient(), ctx));

  entries_.push_back(std::move(e));
}

inline Catalog Catalog::builtin() {
  static const char* text = R"CAT({
  "version": 1,
  "pairs": [
    {
      "id": "e6f4",
      "factors": [{"type": "E6", "rank": 6}],
      "grading": [0, 1, 0, 0, 0, 0],
      "sigma": {"perm": [6, 2, 5, 4, 3, 1], "signs": [1, 1, 1, 1, 1, 1]},
      "systems": [{"id": "bds", "kind": "standard"}],
      "default_system": "bds",
      "admissible": ["bds"],
      "params": {
        "style": "affine",
        "flags": ["n"],
        "base": {"basis": "simple", "coords": ["5/2", "0", "4", "9/2", "4", "5/2"]},
        "steps": [{"basis": "simple", "coords": ["1/2", "1", "1", "3/2", "1", "1/2"]}]
      },
      "render_basis": [
        {"basis": "simple", "coords": ["1/2", "1", "1", "3/2", "1", "1/2"]},
        {"basis": "simple", "coords": ["1/2", "0", "1/2", "1/2", "1/2", "1/2"]},
        {"basis": "simple", "coords": ["0", "0", "1/2", "1/2", "1/2", "0"]},
        {"basis": "simple", "coords": ["0", "0", "0", "1/2", "0", "0"]}
      ],
      "provenance": "quaternionic form of E6 restricted to its F4-type symmetric subalgebra; involution = nontrivial diagram flip; admissibility for the unique-noncompact-simple system per the standard admissibility tables"
    },
    {
      "id": "spin2m2_m2",
      "factors": [{"type": "D", "rank": 3}],
      "grading": [0, 1, 1],
      "sigma": {"perm": [1, 3, 2], "signs": [1, 1, 1]},
      "systems": [
        {"id": "psi_plus", "kind": "vector", "vector": {"basis": "ambient", "coords": [4, 2, 1]}},
        {"id": "psi_minus", "kind": "vector", "vector": {"basis": "ambient", "coords": [4, -2, 1]}}
      ],
      "default_system": "psi_plus",
      "admissible": ["psi_plus", "psi_minus"],
      "params": {"style": "coords"},
      "provenance": "indefinite orthogonal group of signature (4,2) over its (4,1) subgroup; involution flips the last coordinate; the two admissible systems are the only ones giving discretely decomposable restrictions per the standard tables"
    },
    {
      "id": "spin2m2_m3",
      "factors": [{"type": "D", "rank": 4}],
      "grading": [0, 0, 1, 1],
      "sigma": {"perm": [1, 2, 4, 3], "signs": [1, 1, 1, 1]},
      "systems": [
        {"id": "psi_plus", "kind": "vector", "vector": {"basis": "ambient", "coords": [6, 4, 2, 1]}},
        {"id": "psi_minus", "kind": "vector", "vector": {"basis": "ambient", "coords": [6, 4, -2, 1]}}
      ],
      "default_system": "psi_plus",
      "admissible": ["psi_plus", "psi_minus"],
      "params": {"style": "coords"},
      "provenance": "indefinite orthogonal group of signature (6,2) over its (6,1) subgroup; see spin2m2_m2"
    },
    {
      "id": "spin2m2_m4",
      "factors": [{"type": "D", "rank": 5}],
      "grading": [0, 0, 0, 1, 1],
      "sigma": {"perm": [1, 2, 3, 5, 4], "signs": [1, 1, 1, 1, 1]},
      "systems": [
        {"id": "psi_plus", "kind": "vector", "vector": {"basis": "ambient", "coords": [8, 6, 4, 2, 1]}},
        {"id": "psi_minus", "kind": "vector", "vector": {"basis": "ambient", "coords": [8, 6, 4, -2, 1]}}
      ],
      "default_system": "psi_plus",
      "admissible": ["psi_plus", "psi_minus"],
      "params": {"style": "coords"},
      "provenance": "indefinite orthogonal group of signature (8,2) over its (8,1) subgroup; see spin2m2_m2"
    },
    {
      "id": "sl2diag",
      "factors": [{"type": "A", "rank": 1}, {"type": "A", "rank": 1}],
      "grading": [1, 1],
      "sigma": {"perm": [2, 1], "signs": [1, 1]},
      "systems": [{"id": "hol", "kind": "standard"}],
      "default_system": "hol",
      "admissible": ["hol"],
      "params": {
        "style": "affine",
        "flags": ["lambda", "lambda2"],
        "base": {"basis": "simple", "coords": ["-1/2", "-1/2"]},
        "steps": [
          {"basis": "simple", "coords": ["1/2", "0"]},
          {"basis": "simple", "coords": ["0", "1/2"]}
        ]
      },
      "render_basis": [{"basis": "ambient", "coords": ["1/4", "-1/4", "1/4", "-1/4"]}],
      "provenance": "two copies of the rank-one split form with the factor-swap involution; holomorphic systems of hermitian pairs are always admissible"
    },
    {
      "id": "su11su11_diag",
      "factors": [{"type": "A", "rank": 1}, {"type": "A", "rank": 1}],
      "grading": [1, 1],
      "sigma": {"perm": [2, 1], "signs": [1, 1]},
      "systems": [{"id": "hol", "kind": "standard"}],
      "default_system": "hol",
      "admissible": ["hol"],
      "params": {
        "style": "affine",
        "flags": ["lambda", "lambda2"],
        "base": {"basis": "simple", "coords": ["-1/2", "-1/2"]},
        "steps": [
          {"basis": "simple", "coords": ["1/2", "0"]},
          {"basis": "simple", "coords": ["0", "1/2"]}
        ]
      },
      "render_basis": [{"basis": "ambient", "coords": ["1/4", "-1/4", "1/4", "-1/4"]}],
      "provenance": "unitary-group notation for the same data as sl2diag"
    },
    {
      "id": "sun1_un11",
      "factors": [{"type": "A", "rank": 2}],
      "grading": [0, 1],
      "sigma": {"perm": [1, 2], "signs": [-1, 1]},
      "systems": [{"id": "hol", "kind": "standard"}],
      "default_system": "hol",
      "admissible": ["hol"],
      "params": {
        "style": "affine",
        "flags": ["lambda"],
        "base": {"basis": "simple", "coords": [0, -1]},
        "steps": [{"basis": "simple", "coords": ["1/3", "2/3"]}]
      },
      "render_basis": [
        {"basis": "ambient", "coords": ["2/3", "-1/3", "-1/3"]},
        {"basis": "ambient", "coords": ["1/3", "1/3", "-2/3"]}
      ],
      "provenance": "rank-two unitary form over the subgroup preserving a line split; inner involution with a sign twist on the first root vector; holomorphic systems of hermitian pairs are always admissible"
    },
    {
      "id": "su11_gg",
      "factors": [{"type": "A", "rank": 1}],
      "grading": [1],
      "sigma": {"perm": [1], "signs": [1]},
      "systems": [{"id": "hol", "kind": "standard"}],
      "default_system": "hol",
      "admissible": ["hol"],
      "params": {
        "style": "affine",
        "flags": ["lambda"],
        "base": {"basis": "simple", "coords": ["-1/2"]},
        "steps": [{"basis": "simple", "coords": ["1/2"]}]
      },
      "render_basis": [{"basis": "ambient", "coords": ["1/2", "-1/2"]}],
      "provenance": "degenerate pair of a group with itself; the associated subalgebra is the maximal compact part"
    }
  ]
})CAT";
  return from_json(text);
}

}  // namespace branchlab
