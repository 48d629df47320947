#pragma once

// JSON for groups, tables, idempotents and Berman runs, plus the group file
// loader and the csv / pretty renderers used by the CLI.

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wedderburn/berman.hpp"
#include "wedderburn/catalog.hpp"
#include "wedderburn/structure.hpp"

namespace wedderburn {
namespace report {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Group input

inline void only_keys(const json& j, const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(ErrorKind::BadInput, "group spec must be a JSON object");
  for (auto& [k, v] : j.items())
    if (!allowed.count(k)) fail(ErrorKind::BadInput, "unknown key in group spec: " + k);
}

inline Group check_bound(Group G, int order_bound) {
  if (G.order() > order_bound)
    fail(ErrorKind::OrderBoundExceeded, "group order " + std::to_string(G.order()) + " exceeds " + std::to_string(order_bound));
  return G;
}

/// {"name", "permutations": [[cycle, ...], ...], "degree"} or {"catalog", "params"}.
inline Group group_from_json(const json& j, int order_bound = kDefaultOrderBound) {
  try {
    if (j.contains("catalog")) {
      only_keys(j, {"catalog", "params"});
      std::vector<int> params;
      if (j.contains("params")) params = j.at("params").get<std::vector<int>>();
      return check_bound(catalog(j.at("catalog").get<std::string>(), params), order_bound);
    }
    only_keys(j, {"name", "permutations", "degree"});
    const int degree = j.at("degree").get<int>();
    if (degree < 1) fail(ErrorKind::BadInput, "degree must be positive");
    std::vector<Perm> gens;
    for (auto& g : j.at("permutations")) gens.push_back(perm_from_cycles(degree, g.get<std::vector<std::vector<int>>>()));
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "G";
    return from_permutations(degree, gens, {}, name, order_bound);
  } catch (const json::exception& e) {
    fail(ErrorKind::BadInput, std::string("malformed group spec: ") + e.what());
  }
}

inline Group load_group(const std::string& path, int order_bound = kDefaultOrderBound) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorKind::BadInput, path + ": " + e.what());
  }
  return group_from_json(j, order_bound);
}

// ---------------------------------------------------------------------------
// Builders

inline json labels(const Group& G, const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(G.label(x));
  return a;
}

inline json classes(const Group& G, const CharacterTable& T) {
  json out = json::array();
  const auto& cc = T.classes;
  for (int k = 0; k < cc.count(); ++k)
    out.push_back({{"index", k},
                   {"representative", G.label(cc.representatives[k])},
                   {"order", G.element_order(cc.representatives[k])},
                   {"size", cc.sizes[k]},
                   {"members", labels(G, cc.classes[k])}});
  return out;
}

inline json fclasses(const Group& G, const FClassPartition& P) {
  json out = json::array();
  for (std::size_t i = 0; i < P.classes.size(); ++i) {
    auto& L = P.classes[i];
    out.push_back({{"index", i},
                   {"representative", G.label(L.representative)},
                   {"order", L.order},
                   {"size", L.members.size()},
                   {"classes", L.classes},
                   {"r_sequence", L.r_sequence},
                   {"members", labels(G, L.members)}});
  }
  return out;
}

/// Values as coordinates in the zeta_u power basis over Q, with a symbolic form.
inline json chartable(const Group& G, const CharacterTable& T) {
  CyclotomicField Q(T.u, {1});
  json rows = json::array();
  for (int i = 0; i < T.count(); ++i) {
    json vals = json::array(), pretty = json::array();
    for (int k = 0; k < T.class_count(); ++k) {
      json c = json::array();
      for (int t = 0; t < Q.degree(); ++t) c.push_back(Q.coordinate(T.values[i][k], t).get_str());
      vals.push_back(c);
      pretty.push_back(Q.format(T.values[i][k]));
    }
    rows.push_back({{"index", i}, {"degree", T.degrees[i]}, {"values", vals}, {"pretty", pretty}});
  }
  json reps = json::array();
  for (int r : T.classes.representatives) reps.push_back(G.label(r));
  return {{"u", T.u}, {"basis", "zeta" + std::to_string(T.u) + "^t, t < " + std::to_string(Q.degree())},
          {"classes", reps}, {"characters", rows}};
}

template <class K>
json fchartable(const K& F, const Group& G, const FClassPartition& P, const FCharTable<K>& X) {
  json reps = json::array();
  for (auto& L : P.classes) reps.push_back(G.label(L.representative));
  json rows = json::array();
  for (int j = 0; j < X.count(); ++j) {
    json vals = json::array(), pretty = json::array();
    for (auto& v : X.values[j]) {
      vals.push_back(F.to_json(v));
      pretty.push_back(F.format(v));
    }
    rows.push_back({{"index", j}, {"orbit", X.orbits[j]}, {"degree", X.degrees[j]}, {"values", vals}, {"pretty", pretty}});
  }
  return {{"fclasses", reps}, {"characters", rows}};
}

inline json checks(const IdempotentChecks& c) {
  return {{"idempotent", c.idempotent}, {"central", c.central}, {"orthogonal", c.orthogonal}, {"complete", c.complete}};
}

template <class K>
json pcis(const K& F, const Group& G, const std::vector<CentralIdempotent<K>>& es) {
  std::vector<AlgebraElement<K>> elems;
  for (auto& e : es) elems.push_back(e.element);
  auto all = check_idempotents(F, G, elems, algebra::one(F, G));
  json out = json::array();
  for (auto& e : es) {
    json coeffs = json::array();
    for (std::size_t k = 0; k < e.coeffs.size(); ++k)
      if (!F.is_zero(e.coeffs[k])) coeffs.push_back({k, F.to_json(e.coeffs[k])});
    auto c = check_idempotents(F, G, {e.element}, e.element);
    c.orthogonal = all.orthogonal;
    c.complete = all.complete;
    out.push_back({{"id", e.id}, {"orbit", e.orbit}, {"coeffs", coeffs}, {"checks", checks(c)}});
  }
  return out;
}

template <class K>
json component(const K& F, const WedderburnComponent<K>& W) {
  json mp = json::array();
  for (auto& c : W.center.minpoly) mp.push_back(F.to_json(c));
  return {{"id", W.id},       {"orbit", W.orbit}, {"dim_I", W.dim_I}, {"delta", W.delta},
          {"n", W.n},         {"m", W.m},         {"dim_V", W.dim_V}, {"dim_D", W.dim_D},
          {"center_minpoly", mp}, {"certificate", W.certificate}};
}

inline json induction(const InductionRecord& I) {
  json cs = json::array();
  for (auto& c : I.constituents)
    cs.push_back({{"pci", c.pci}, {"multiplicity", c.multiplicity}, {"degree", c.degree},
                  {"delta", c.delta}, {"n", c.n}, {"m", c.m}});
  return {{"eta", {{"degree", I.eta_degree}, {"delta", I.eta_delta}, {"n", I.eta_n}, {"m", I.eta_m}}},
          {"shape", I.shape},
          {"constituents", cs}};
}

template <class K>
json berman(const BermanSetting<K>& S, int subgroup, const BermanReport<K>& R) {
  const auto& F = S.F;
  json roots = json::array();
  for (auto& r : R.roots) roots.push_back(F.to_json(r));
  json out = {{"subgroup", subgroup},
              {"subgroup_order", S.H.group.order()},
              {"p", R.p},
              {"pci", R.pci},
              {"stable", R.stable},
              {"conjugates", R.conjugates},
              {"case", R.kase},
              {"lambda", R.lambda ? F.to_json(*R.lambda) : json(nullptr)},
              {"lift", R.lift >= 0 ? json(S.G.label(R.lift)) : json(nullptr)},
              {"lambda_exhausted", R.lambda_exhausted},
              {"roots", roots},
              {"d", R.d},
              {"k", R.k},
              {"s", R.induction.s},
              {"split", R.split},
              {"induction", induction(R.induction)}};
  auto c = checks(R.checks);
  c["primitive"] = R.primitive;
  c["count"] = R.count_ok;
  c["alternative_lifts"] = R.alternative_lifts;
  c["lifts_agree"] = R.lifts_agree;
  c["matches_split"] = R.induction.matches_split;
  c["degree_sum"] = R.induction.degree_sum;
  c["schur"] = R.induction.schur;
  c["dk"] = R.induction.dk;
  c["s_divides"] = R.induction.s_divides;
  c["degrees"] = R.induction.degrees;
  c["ok"] = R.ok();
  out["checks"] = c;
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

inline std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

/// Rows of a table: an array of objects, or the "rows" key of an object, or
/// the object itself as a single row.
inline json as_rows(const json& j) {
  if (j.is_array()) return j;
  if (j.is_object() && j.contains("rows") && j["rows"].is_array()) return j["rows"];
  return json::array({j});
}

inline std::string to_csv(const json& j) {
  auto rows = as_rows(j);
  std::vector<std::string> cols;
  for (auto& r : rows)
    if (r.is_object())
      for (auto& [k, v] : r.items())
        if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_quote(cols[i]);
  os << "\n";
  for (auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      os << (i ? "," : "") << (r.contains(cols[i]) ? csv_quote(cell(r[cols[i]])) : "");
    os << "\n";
  }
  return os.str();
}

inline void pretty_into(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty() && !(v.is_array() && !v[0].is_structured())) {
        os << pad << k << ":\n";
        pretty_into(os, v, indent + 2);
      } else {
        os << pad << k << ": " << cell(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad << "[" << i << "]\n";
      pretty_into(os, j[i], indent + 2);
    }
  } else {
    os << pad << cell(j) << "\n";
  }
}

inline std::string to_pretty(const json& j) {
  std::ostringstream os;
  pretty_into(os, j, 0);
  return os.str();
}

inline std::string render(const json& j, const std::string& format) {
  if (format == "csv") return to_csv(j);
  if (format == "pretty") return to_pretty(j);
  return j.dump(2) + "\n";
}

}  // namespace report
}  // namespace wedderburn
