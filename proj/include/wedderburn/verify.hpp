#pragma once

// End-to-end checks on one (group, field) pair. Every suite records what it
// compared; any disagreement lands in "diff" and clears "ok".

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wedderburn/berman.hpp"
#include "wedderburn/field_spec.hpp"
#include "wedderburn/oracle.hpp"
#include "wedderburn/report.hpp"
#include "wedderburn/structure.hpp"

namespace wedderburn {

struct VerifyOptions {
  bool full = true;  ///< fast skips structure and berman
  std::uint64_t seed = 0;
};

namespace verify_detail {

using json = nlohmann::json;
using Partition = std::set<std::set<int>>;

inline Partition partition_of(const FClassPartition& P) {
  Partition out;
  for (auto& L : P.classes) out.insert({L.members.begin(), L.members.end()});
  return out;
}

/// g ~ h iff h is conjugate to g^a for some a in A.
inline Partition power_classes(const Group& G, const std::vector<int>& A) {
  Partition out;
  for (int g = 0; g < G.order(); ++g) {
    std::set<int> cl;
    for (int a : A)
      for (int t = 0; t < G.order(); ++t) cl.insert(G.conj(G.pow(g, a), t));
    out.insert(cl);
  }
  return out;
}

/// g ~ h iff every F-character takes the same value on both.
template <class K>
Partition character_value_classes(const K& F, const Group& G, const CharacterTable& T, const FCharTable<K>& X) {
  Partition out;
  for (int g = 0; g < G.order(); ++g) {
    std::set<int> cl;
    for (int h = 0; h < G.order(); ++h) {
      bool same = true;
      for (auto& tau : X.on_classes)
        same = same && F.equal(tau[T.classes.class_of[g]], tau[T.classes.class_of[h]]);
      if (same) cl.insert(h);
    }
    out.insert(cl);
  }
  return out;
}

inline json partition_json(const Group& G, const Partition& P) {
  json a = json::array();
  for (auto& s : P) a.push_back(report::labels(G, {s.begin(), s.end()}));
  return a;
}

class Recorder {
 public:
  json diff = json::array();
  void expect(bool ok, json& suite, const std::string& key, const std::string& what) {
    suite[key] = ok;
    if (!ok) {
      suite["ok"] = false;
      diff.push_back(what);
    }
  }
};

template <class K>
json fclass_suite(const K& F, const Group& G, const CharacterTable& T, Recorder& rec) {
  json s = {{"ok", true}};
  auto P = f_classes(F, G, T);
  auto X = f_char_table(F, T, P);
  s["classes"] = P.count();
  s["rows"] = X.count();
  rec.expect(X.count() == P.count(), s, "rows_equal_classes",
             "fclasses: " + std::to_string(X.count()) + " F-characters vs " + std::to_string(P.count()) + " F-classes");

  auto mine = partition_of(P);
  auto by_power = power_classes(G, P.A);
  rec.expect(mine == by_power, s, "power_oracle", "fclasses: Berman orbits " + partition_json(G, mine).dump() +
                                                       " vs power oracle " + partition_json(G, by_power).dump());
  auto by_value = character_value_classes(F, G, T, X);
  rec.expect(mine == by_value, s, "character_oracle", "fclasses: Berman orbits " + partition_json(G, mine).dump() +
                                                          " vs character values " + partition_json(G, by_value).dump());

  // the F-class of every x is the union of the classes of x^r over the r-sequence
  std::map<int, std::vector<int>> rs;
  bool union_ok = true;
  std::string bad;
  for (int x = 0; x < G.order(); ++x) {
    const int n = G.element_order(x);
    if (!rs.count(n)) rs[n] = factor_cyclotomic(F, n).r_sequence;
    std::set<int> got;
    for (int r : rs[n])
      for (int g : T.classes.classes[T.classes.class_of[G.pow(x, r)]]) got.insert(g);
    auto& L = P.classes[P.of_class[T.classes.class_of[x]]];
    if (got != std::set<int>(L.members.begin(), L.members.end())) {
      union_ok = false;
      if (bad.empty()) bad = G.label(x);
    }
  }
  rec.expect(union_ok, s, "r_sequence_union", "fclasses: r-sequence union differs at " + bad);
  return s;
}

template <class K>
json pci_suite(const K& F, const Group& G, const CharacterTable& T, const std::vector<CentralIdempotent<K>>& es,
               std::uint64_t seed, Recorder& rec) {
  json s = {{"ok", true}, {"count", es.size()}};
  std::vector<AlgebraElement<K>> elems;
  std::vector<std::vector<typename K::Elem>> coeffs;
  for (auto& e : es) {
    elems.push_back(e.element);
    coeffs.push_back(e.coeffs);
  }
  auto c = check_idempotents(F, G, elems, algebra::one(F, G));
  s["checks"] = report::checks(c);
  rec.expect(c.all(), s, "identities", "pcis: " + report::checks(c).dump());

  auto r = oracle::pcis(F, G, T.classes, seed);
  auto oc = oracle::verify(F, G, T.classes, r);
  s["oracle_count"] = r.idempotents.size();
  rec.expect(oc.all(), s, "oracle_identities", "pcis: oracle idempotents " + report::checks(oc).dump());
  bool same = oracle::same_set(F, coeffs, r.idempotents);
  std::string what = "pcis: character formula and center splitting disagree";
  if (!same) {
    json mine = json::array(), theirs = json::array();
    for (auto& v : coeffs) {
      json a = json::array();
      for (auto& x : v) a.push_back(F.to_json(x));
      mine.push_back(a);
    }
    for (auto& v : r.idempotents) {
      json a = json::array();
      for (auto& x : v) a.push_back(F.to_json(x));
      theirs.push_back(a);
    }
    what += "; formula " + mine.dump() + " oracle " + theirs.dump();
  }
  rec.expect(same, s, "oracle_match", what);
  return s;
}

template <class K>
json audit_suite(const K& F, const Group& G, const std::vector<CentralIdempotent<K>>& es, Recorder& rec) {
  json s = {{"ok", true}};
  int total = 0;
  json dims = json::array();
  for (auto& e : es) {
    int d = structure_detail::left_ideal_dimension(F, G, e.element);
    dims.push_back(d);
    total += d;
  }
  s["dim_I"] = dims;
  s["sum"] = total;
  rec.expect(total == G.order(), s, "sum_is_order",
             "audit: sum of dim_I is " + std::to_string(total) + ", |G| = " + std::to_string(G.order()));
  return s;
}

template <class K>
json structure_suite(const K& F, const Group& G, const CharacterTable& T, const std::vector<CentralIdempotent<K>>& es,
                     std::uint64_t seed, Recorder& rec) {
  json s = {{"ok", true}}, comps = json::array();
  int total = 0;
  for (auto& e : es) {
    auto W = simple_module_and_commutant(F, G, T, e, seed);
    auto B = base_change_split(F, G, T, e, W.center);
    json c = report::component(F, W);
    const std::string tag = "structure: pci " + std::to_string(e.id);
    c["ok"] = true;
    rec.expect(W.dim_I == W.n * W.n * W.m * W.m * W.delta, c, "dim_I_identity", tag + " dim_I != n^2 m^2 delta");
    rec.expect(W.dim_V == W.n * W.m * W.m * W.delta, c, "dim_V_identity", tag + " dim_V != n m^2 delta");
    rec.expect(W.dim_D == W.m * W.m * W.delta, c, "dim_D_identity", tag + " dim_D != m^2 delta");
    rec.expect(B.simply_transitive && B.orbit_length == W.delta, c, "galois_simply_transitive",
               tag + " Galois action on base-changed pcis not simply transitive of order delta");
    if (F.characteristic() != 0) rec.expect(W.m == 1, c, "schur_one", tag + " m != 1 over a finite field");
    if (!c["ok"].get<bool>()) s["ok"] = false;
    total += W.dim_I;
    comps.push_back(c);
  }
  s["components"] = comps;
  rec.expect(total == G.order(), s, "sum_is_order", "structure: sum of n^2 m^2 delta is " + std::to_string(total));
  return s;
}

template <class K>
json berman_suite(const K& F, const Group& G, std::uint64_t seed, bool splitting, Recorder& rec) {
  json s = {{"ok", true}}, runs = json::array();
  std::map<std::string, int> cases;
  auto subs = all_prime_index_normal_subgroups(G);
  for (int h = 0; h < static_cast<int>(subs.size()); ++h) {
    auto S = berman_setting(F, G, subs[h], seed);
    for (int j = 0; j < static_cast<int>(S.pcis_H.size()); ++j) {
      auto R = analyze(S, j);
      const std::string tag = "berman: subgroup " + std::to_string(h) + " pci " + std::to_string(j);
      json r = {{"subgroup", h},
                {"pci", j},
                {"case", R.kase},
                {"split", R.split},
                {"shape", R.induction.shape},
                {"s", R.induction.s},
                {"ok", true}};
      rec.expect(R.ok(), r, "consistent", tag + " " + report::berman(S, h, R)["checks"].dump());
      if (splitting) {
        const int want = R.stable ? S.p : 1;
        rec.expect(static_cast<int>(R.split.size()) == want, r, "splitting_field_count",
                   tag + " split into " + std::to_string(R.split.size()) + " over a splitting field");
      }
      if (!r["ok"].get<bool>()) s["ok"] = false;
      ++cases[R.kase];
      runs.push_back(r);
    }
  }
  s["subgroups"] = subs.size();
  s["cases"] = cases;
  s["runs"] = runs;
  return s;
}

/// Runs one suite; a thrown domain error counts as a failure of that suite.
template <class Fn>
json guarded(const std::string& name, Recorder& rec, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    rec.diff.push_back(name + ": " + e.what());
    return {{"ok", false}, {"error", e.what()}};
  }
}

}  // namespace verify_detail

template <class K>
nlohmann::json verify_field(const K& F, const Group& G, const CharacterTable& T, const VerifyOptions& opt) {
  using namespace verify_detail;
  Recorder rec;
  json suites;
  suites["fclasses"] = guarded("fclasses", rec, [&] { return fclass_suite(F, G, T, rec); });
  std::vector<CentralIdempotent<K>> es;
  suites["pcis"] = guarded("pcis", rec, [&] {
    auto P = f_classes(F, G, T);
    es = pcis(F, G, T, P);
    return pci_suite(F, G, T, es, opt.seed, rec);
  });
  if (!es.empty()) {
    suites["audit"] = guarded("audit", rec, [&] { return audit_suite(F, G, es, rec); });
    if (opt.full) {
      suites["structure"] = guarded("structure", rec, [&] { return structure_suite(F, G, T, es, opt.seed, rec); });
      const bool splitting = reduce_group(F.base_group(), T.u).size() == 1;
      suites["berman"] = guarded("berman", rec, [&] { return berman_suite(F, G, opt.seed, splitting, rec); });
    }
  }
  bool ok = rec.diff.empty();
  for (auto& [k, v] : suites.items()) ok = ok && v.value("ok", false);
  return {{"suites", suites}, {"diff", rec.diff}, {"ok", ok}};
}

inline nlohmann::json verify_all(const Group& G, const FieldSpec& field, const VerifyOptions& opt) {
  auto T = ordinary_table(G, opt.seed);
  auto K = make_ambient(field, T.u);
  auto body = std::visit([&](const auto& F) { return verify_field(F, G, T, opt); }, K);
  nlohmann::json out = {{"group", G.name()},
                        {"order", G.order()},
                        {"field", field.str()},
                        {"seed", opt.seed},
                        {"level", opt.full ? "full" : "fast"}};
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

}  // namespace wedderburn
