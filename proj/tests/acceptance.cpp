// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wedderburn/berman.hpp"
#include "wedderburn/catalog.hpp"
#include "wedderburn/verify.hpp"

using namespace wedderburn;
using json = nlohmann::json;

namespace {

int failures = 0;

void line(int id, bool ok, const std::string& what, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS " : "FAIL ") << id << "  " << what;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
}

using QS = BermanSetting<CyclotomicField>;

QS over_q(const std::string& name, std::vector<int> params) {
  auto G = catalog(name, params);
  auto subs = all_prime_index_normal_subgroups(G);
  auto F = CyclotomicField::over_cyclotomic(ordinary_table(G).u, 1);
  return berman_setting(F, G, subs[auto_subgroup(G, subs)], 0);
}

AlgebraElement<CyclotomicField> cyclic_average(const QS& S, int g) {
  auto a = algebra::zero(S.F, S.G);
  const int k = S.G.element_order(g);
  for (int i = 0, h = 0; i < k; ++i, h = S.G.mul(h, g)) a[h] = S.F.from_ratio(1, k);
  return a;
}

// index of the H-pci 1 - e_x
int faithful_pci(const QS& S) {
  auto e = algebra::sub(S.F, algebra::one(S.F, S.G), cyclic_average(S, S.G.find("x")));
  for (std::size_t j = 0; j < S.lifted_H.size(); ++j)
    if (algebra::equal(S.F, S.lifted_H[j], e)) return static_cast<int>(j);
  throw std::runtime_error("1 - e_x is not a pci of the subgroup");
}

std::string poly_str(const CyclotomicField& F, const Poly<CyclotomicField>& f) {
  std::string s;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (F.is_zero(f[i])) continue;
    if (!s.empty()) s += " + ";
    s += "(" + F.format(f[i]) + ")X^" + std::to_string(i);
  }
  return s;
}

std::string describe(const BermanReport<CyclotomicField>& R) {
  std::ostringstream os;
  os << "case " << R.kase << ", shape " << R.induction.shape << ", split " << R.split.size();
  for (auto& c : R.induction.constituents)
    os << ", rho(pci " << c.pci << ") mult " << c.multiplicity << " delta " << c.delta << " n " << c.n << " m " << c.m;
  return os.str();
}

template <class Fn>
void guarded(int id, const std::string& what, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    line(id, false, what, std::string("exception: ") + e.what());
  }
}

void criterion1() {
  guarded(1, "Q8/C4 over Q", [] {
    auto S = over_q("Q8", {});
    const int j = faithful_pci(S);
    auto Z = center_of_component(S.F, S.H.group, S.TH, S.pcis_H[j]);
    // Z = Q(sqrt(disc)) is Q(i) iff -disc is a rational square
    bool qi = Z.delta == 2 && poly::degree<CyclotomicField>(Z.minpoly) == 2;
    if (qi) {
      mpq_class b = S.F.to_rational(Z.minpoly[1]), c = S.F.to_rational(Z.minpoly[0]);
      mpq_class disc = b * b - 4 * c;
      qi = sgn(disc) < 0 && structure_detail::is_square(-disc);
    }
    auto R = analyze(S, j);
    bool ok = qi && R.ok() && R.kase == "1" && R.induction.shape == "irreducible" && R.induction.constituents.size() == 1;
    int dim_I = 0;
    std::multiset<int> degrees;
    if (ok) {
      auto& c = R.induction.constituents[0];
      dim_I = S.component_G(c.pci).dim_I;
      ok = c.delta == 1 && c.m == 2 && c.n == 1 && dim_I == 4;
    }
    for (std::size_t i = 0; i < S.pcis_G.size(); ++i) degrees.insert(S.component_G(static_cast<int>(i)).dim_V);
    ok = ok && degrees == std::multiset<int>{1, 1, 1, 1, 4};
    std::ostringstream os;
    os << "Z min poly " << poly_str(S.F, Z.minpoly) << ", " << describe(R) << ", dim_I " << dim_I
       << " (|Q8| = 8 bounds dim_I), rational degrees";
    for (int d : degrees) os << " " << d;
    line(1, ok, "Q8/C4 over Q", os.str());
  });
}

void criterion2() {
  guarded(2, "C7:C3/C7 over Q", [] {
    auto S = over_q("C7:C3", {});
    auto R = analyze(S, faithful_pci(S));
    bool ok = R.ok() && R.kase == "1" && R.induction.shape == "p_rho" && R.induction.constituents.size() == 1;
    if (ok) {
      auto& c = R.induction.constituents[0];
      ok = c.multiplicity == 3 && c.n == 3 && c.delta == 2 && c.m == 1;
    }
    line(2, ok, "C7:C3/C7 over Q", describe(R));
  });
}

void criterion3() {
  guarded(3, "C_{p^2}/C_p over Q, p = 2, 3, 5", [] {
    bool ok = true;
    std::string detail;
    for (int p : {2, 3, 5}) {
      auto S = over_q("Cp2", {p});
      const int j = faithful_pci(S);
      auto Z = center_of_component(S.F, S.H.group, S.TH, S.pcis_H[j]);
      auto R = analyze(S, j);
      bool here = R.ok() && R.kase == "A" && R.lambda && Z.delta == p - 1 &&
                  S.F.equal(S.F.pow(*R.lambda, p), S.F.one()) && !S.F.equal(*R.lambda, S.F.one()) &&
                  R.roots.empty() && R.induction.shape == "irreducible" && R.induction.constituents.size() == 1 &&
                  R.induction.constituents[0].delta == p * (p - 1);
      ok = ok && here;
      detail += (detail.empty() ? "" : "; ") + std::string("p=") + std::to_string(p) + " lambda " +
                (R.lambda ? S.F.format(*R.lambda) : "none") + ", " + describe(R);
    }
    line(3, ok, "C_{p^2}/C_p over Q, p = 2, 3, 5", detail);
  });
}

void criterion4() {
  guarded(4, "Q8oC4/Q8 over Q", [] {
    auto S = over_q("Q8oC4", {});
    auto R = analyze(S, faithful_pci(S));
    bool ok = R.ok() && R.kase == "A" && R.lambda && S.F.equal(*R.lambda, S.F.from_int(-1)) &&
              R.induction.shape == "p_rho" && R.induction.constituents.size() == 1;
    if (ok) {
      auto& c = R.induction.constituents[0];
      ok = c.multiplicity == 2 && c.delta == 2 && c.m == 1 && c.n == 2;
    }
    line(4, ok, "Q8oC4/Q8 over Q", "lambda " + (R.lambda ? S.F.format(*R.lambda) : std::string("none")) + ", " + describe(R));
  });
}

void criterion5() {
  guarded(5, "C_p x C_p over Q, p = 2, 3, 5", [] {
    bool ok = true;
    std::string detail;
    for (int p : {2, 3, 5}) {
      auto S = over_q("CxC", {p});
      auto R = analyze(S, faithful_pci(S));
      const int x = S.G.find("x"), y = S.G.find("y");
      auto ex = algebra::sub(S.F, algebra::one(S.F, S.G), cyclic_average(S, x));
      std::vector<std::vector<Cyc>> want, got(R.split_elements.begin(), R.split_elements.end());
      for (int i = 0, xi = 0; i < p; ++i, xi = S.G.mul(xi, x))
        want.push_back(algebra::mul(S.F, S.G, cyclic_average(S, S.G.mul(xi, y)), ex));
      bool here = R.ok() && R.kase == "B" && R.lambda && S.F.equal(*R.lambda, S.F.one()) &&
                  static_cast<int>(R.roots.size()) == p && oracle::same_set(S.F, want, got);
      ok = ok && here;
      detail += (detail.empty() ? "" : "; ") + std::string("p=") + std::to_string(p) + " roots " +
                std::to_string(R.roots.size()) + ", " + describe(R);
    }
    line(5, ok, "C_p x C_p over Q, p = 2, 3, 5", detail);
  });
}

void criterion6() {
  guarded(6, "SL2(3)/Q8 over Q", [] {
    auto S = over_q("SL23", {});
    auto R = analyze(S, faithful_pci(S));
    bool ok = R.ok() && R.kase == "C" && R.d == 2 && R.k == 1 && R.split.size() == 2 && R.induction.s == 2 &&
              R.induction.constituents.size() == 2;
    if (ok)
      for (auto& c : R.induction.constituents) {
        if (c.pci == R.split[0]) ok = ok && c.multiplicity == 1 && c.m == 2;
        else ok = ok && c.multiplicity == 2 && c.m == 1;
      }
    ok = ok && std::gcd(R.induction.eta_m, R.d) % std::max(R.induction.s, 1) == 0;
    line(6, ok, "SL2(3)/Q8 over Q",
         describe(R) + ", d " + std::to_string(R.d) + " k " + std::to_string(R.k) + " s " + std::to_string(R.induction.s));
  });
}

// ---------------------------------------------------------------------------
// catalog x field matrix

struct Run {
  CatalogEntry entry;
  FieldSpec spec;
  std::string group, field;
  bool finite = false, splitting = false, ordinary = false;  // ordinary: in {Q, Q(zeta_u), GF(q1..q3)}
  json report;
  std::string dump;
};

bool flag(const json& r, const std::string& suite, const std::string& key) {
  return r.contains("suites") && r["suites"].contains(suite) && r["suites"][suite].value(key, false);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();

  std::vector<Run> runs;
  VerifyOptions opt{true, 0};
  for (auto& entry : standard_catalog()) {
    auto G = catalog(entry.name, entry.params);
    const int u = G.exponent();
    std::vector<std::pair<FieldSpec, int>> fields;  // 0 ordinary, 1 splitting only
    fields.push_back({FieldSpec::rationals(), 0});
    fields.push_back({u > 2 ? FieldSpec::cyclotomic(u) : FieldSpec::rationals(), 0});
    for (auto q : small_coprime_fields(G.order(), u, 3)) fields.push_back({FieldSpec::finite(q), 0});
    fields.push_back({FieldSpec::finite(static_cast<std::uint64_t>(nt::prime_one_mod(u, 2))), 1});
    for (std::size_t i = 0; i < fields.size(); ++i) {
      auto& [f, kind] = fields[i];
      Run r;
      r.entry = entry;
      r.spec = f;
      r.group = G.name();
      r.field = f.str();
      r.finite = f.kind == FieldSpec::Kind::Finite;
      r.ordinary = kind == 0;
      r.splitting = i == 1 || kind == 1;
      try {
        r.report = verify_all(G, f, opt);
      } catch (const std::exception& e) {
        r.report = {{"ok", false}, {"diff", {e.what()}}};
      }
      r.dump = r.report.dump();
      runs.push_back(std::move(r));
    }
  }

  auto sweep = [&](int id, const std::string& what, auto select, auto good) {
    int n = 0;
    std::string bad;
    for (auto& r : runs) {
      if (!select(r)) continue;
      ++n;
      if (!good(r) && bad.size() < 400) bad += " " + r.group + "/" + r.field + " " + r.report["diff"].dump();
    }
    line(id, bad.empty() && n > 0, what, std::to_string(n) + " (group, field) pairs" + (bad.empty() ? "" : ";" + bad));
  };
  auto all = [](const Run&) { return true; };

  sweep(7, "F-character rows = F-classes, brute-force ~_F oracles agree",
        [](const Run& r) { return r.ordinary; },
        [](const Run& r) {
          return flag(r.report, "fclasses", "rows_equal_classes") && flag(r.report, "fclasses", "power_oracle") &&
                 flag(r.report, "fclasses", "character_oracle");
        });
  sweep(8, "C_F(x) is the union of C(x^r) over the r-sequence, every element, over Q and GF(q)",
        [](const Run& r) { return r.field == "Q" || r.finite; },
        [](const Run& r) { return flag(r.report, "fclasses", "r_sequence_union"); });
  sweep(9, "character-formula pcis equal center-splitting pcis; e^2 = e, orthogonal, sum 1, central", all,
        [](const Run& r) {
          return flag(r.report, "pcis", "ok") && flag(r.report, "pcis", "oracle_match") &&
                 flag(r.report, "pcis", "identities");
        });
  sweep(10, "dim_I = n^2 m^2 delta, dim_V = n m^2 delta, sum dim_I = |G|, Galois action simply transitive", all,
        [](const Run& r) { return flag(r.report, "structure", "ok") && flag(r.report, "audit", "ok"); });
  sweep(11, "splitting fields: stable pcis split into p, unstable orbits induce one pci",
        [](const Run& r) { return r.splitting; },
        [](const Run& r) {
          if (!flag(r.report, "berman", "ok")) return false;
          for (auto& run : r.report["suites"]["berman"]["runs"])
            if (!run.value("splitting_field_count", false)) return false;
          return true;
        });
  sweep(12, "Schur index bookkeeping matches structure recomputation; case C: d k = p - 1, deg rho_i = (d/s) deg eta",
        all, [](const Run& r) { return flag(r.report, "berman", "ok"); });

  // determinism: a second full pass must reproduce every report byte for byte
  int same = 0;
  std::string differs;
  for (auto& r : runs) {
    json again;
    try {
      again = verify_all(catalog(r.entry.name, r.entry.params), r.spec, opt);
    } catch (const std::exception& e) {
      again = {{"ok", false}, {"diff", {e.what()}}};
    }
    if (again.dump() == r.dump) ++same;
    else differs += " " + r.group + "/" + r.field;
  }
  line(13, differs.empty(), "two verify runs with the same seed give byte-identical JSON",
       std::to_string(same) + "/" + std::to_string(runs.size()) + " identical" + differs);

  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures ? "FAILED " : "ALL PASS ") << failures << " failing, " << static_cast<int>(secs) << " s"
            << std::endl;
  return failures ? 1 : 0;
}
