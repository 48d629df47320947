// wedderburn: classes, tables, idempotents, Wedderburn data and Berman
// splitting for a permutation group over Q, Q(zeta_m) or GF(q).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wedderburn/wedderburn.hpp"

using namespace wedderburn;
using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> catalog;  // name then params
  std::string group_file;
  std::string field = "Q";
  std::uint64_t seed = 0;
  int max_order = kDefaultOrderBound;
  std::string format = "json";
  std::string level = "full";
  std::string subgroup = "auto";
  std::optional<int> pci;
  bool all = false;
  std::string out;
};

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + " expects an integer, got '" + s + "'");
}

Group load(const RunConfig& c) {
  if (c.catalog.empty() == c.group_file.empty()) throw UsageError("give exactly one of --catalog or --group");
  if (!c.group_file.empty()) return report::load_group(c.group_file, c.max_order);
  std::vector<int> params;
  for (std::size_t i = 1; i < c.catalog.size(); ++i) params.push_back(parse_int(c.catalog[i], "--catalog parameter"));
  return report::check_bound(catalog(c.catalog[0], params), c.max_order);
}

int pick(const std::optional<int>& id, int count, const std::string& what) {
  if (id && (*id < 0 || *id >= count))
    throw UsageError(what + " " + std::to_string(*id) + " out of range 0.." + std::to_string(count - 1));
  return id ? *id : -1;
}

json header(const Group& G, const RunConfig& c, const std::string& command) {
  return {{"command", command}, {"group", G.name()}, {"order", G.order()}, {"field", parse_field(c.field).str()}};
}

template <class K>
json field_command(const std::string& cmd, const K& F, const Group& G, const CharacterTable& T, const RunConfig& c) {
  json out = header(G, c, cmd);
  auto P = f_classes(F, G, T);
  if (cmd == "fclasses") {
    out["rows"] = report::fclasses(G, P);
    return out;
  }
  if (cmd == "fchartable") {
    auto X = f_char_table(F, T, P);
    auto t = report::fchartable(F, G, P, X);
    out["fclasses"] = t["fclasses"];
    out["rows"] = t["characters"];
    return out;
  }
  auto es = pcis(F, G, T, P);
  if (cmd == "pcis" || cmd == "wedderburn") {
    const int only = c.all ? -1 : pick(c.pci, static_cast<int>(es.size()), "--pci");
    json rows = json::array();
    if (cmd == "pcis") {
      auto all = report::pcis(F, G, es);
      for (auto& r : all)
        if (only < 0 || r["id"] == only) rows.push_back(r);
    } else {
      for (auto& e : es)
        if (only < 0 || e.id == only) rows.push_back(report::component(F, simple_module_and_commutant(F, G, T, e, c.seed)));
    }
    out["rows"] = rows;
    return out;
  }
  // berman / induce
  auto subs = all_prime_index_normal_subgroups(G);
  if (subs.empty()) fail(ErrorKind::BadParams, "group has no normal subgroup of prime index");
  int h = c.subgroup == "auto" ? auto_subgroup(G, subs) : parse_int(c.subgroup, "--subgroup");
  h = pick(h, static_cast<int>(subs.size()), "--subgroup");
  auto S = berman_setting(F, G, subs[h], c.seed);
  const int only = c.all ? -1 : pick(c.pci, static_cast<int>(S.pcis_H.size()), "--pci");
  out["subgroup"] = {{"index", h}, {"order", subs[h].group.order()}, {"p", S.p},
                     {"members", report::labels(G, subs[h].members)}, {"count", subs.size()}};
  json rows = json::array();
  for (int j = 0; j < static_cast<int>(S.pcis_H.size()); ++j) {
    if (only >= 0 && j != only) continue;
    auto R = analyze(S, j);
    if (!R.ok()) fail(ErrorKind::ConsistencyCheckFailed, "Berman run inconsistent for pci " + std::to_string(j) + ": " +
                                                             report::berman(S, h, R)["checks"].dump());
    if (cmd == "berman") {
      rows.push_back(report::berman(S, h, R));
    } else {
      auto I = report::induction(R.induction);
      rows.push_back({{"pci", j}, {"case", R.kase}, {"s", R.induction.s}, {"eta", I["eta"]}, {"shape", I["shape"]},
                      {"constituents", I["constituents"]}});
    }
  }
  out["rows"] = rows;
  return out;
}

// returns the exit status
int run(const std::string& cmd, RunConfig c) {
  if (const char* env = std::getenv("WEDDERBURN_SEED")) {
    try {
      std::size_t used = 0;
      c.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError(std::string("WEDDERBURN_SEED must be a non-negative integer, got '") + env + "'");
    }
  }
  if (c.all && c.pci) throw UsageError("--pci and --all are exclusive");
  auto G = load(c);
  auto field = parse_field(c.field);
  json out;
  int status = 0;
  if (cmd == "verify") {
    out = verify_all(G, field, {c.level == "full", c.seed});
    if (!out["ok"].get<bool>()) status = 1;
  } else {
    auto T = ordinary_table(G, c.seed);
    if (cmd == "classes") {
      out = header(G, c, cmd);
      out["rows"] = report::classes(G, T);
    } else if (cmd == "chartable") {
      auto t = report::chartable(G, T);
      out = header(G, c, cmd);
      out["u"] = t["u"];
      out["basis"] = t["basis"];
      out["classes"] = t["classes"];
      out["rows"] = t["characters"];
    } else {
      auto K = make_ambient(field, T.u);
      out = std::visit([&](const auto& F) { return field_command(cmd, F, G, T, c); }, K);
    }
  }
  auto text = report::render(out, c.format);
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) fail(ErrorKind::BadInput, "cannot write " + c.out);
    f << text;
  }
  if (status) std::cerr << json{{"error", "VerificationFailed"}, {"diff", out["diff"]}}.dump() << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group algebras over Q, Q(zeta_m) and GF(q): classes, tables, idempotents, Wedderburn data"};
  app.require_subcommand(1);
  RunConfig cfg;
  int pci = -1;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"classes", "conjugacy classes"},
      {"fclasses", "F-conjugacy classes"},
      {"chartable", "ordinary character table over Q(zeta_u)"},
      {"fchartable", "F-character table"},
      {"pcis", "primitive central idempotents of F[G]"},
      {"wedderburn", "center, reduced dimension and Schur index per component"},
      {"berman", "splitting of the pcis of F[H] in F[G], H normal of prime index"},
      {"induce", "decomposition of the induced representations"},
      {"verify", "every invariant suite plus the independent oracles"}};
  for (auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    auto* cat = sub->add_option("--catalog", cfg.catalog, "catalog group and its parameters, e.g. --catalog C 12")
                    ->expected(1, -1);
    auto* grp = sub->add_option("--group", cfg.group_file, "group JSON file");
    cat->excludes(grp);
    sub->add_option("--field", cfg.field, "Q, Q(zeta_m) or GF(q)")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--max-order", cfg.max_order, "largest group order accepted")->capture_default_str();
    sub->add_option("--format", cfg.format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    if (name == "verify")
      sub->add_option("--level", cfg.level, "fast or full")->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
    if (name == "pcis" || name == "wedderburn" || name == "berman" || name == "induce") {
      auto* one = sub->add_option("--pci", pci, "a single pci id");
      auto* all = sub->add_flag("--all", cfg.all, "every pci (the default)");
      one->excludes(all);
    }
    if (name == "berman" || name == "induce")
      sub->add_option("--subgroup", cfg.subgroup, "auto or the index of a prime-index normal subgroup")
          ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  if (auto* o = app.get_subcommands().front()->get_option_no_throw("--pci"); o && o->count()) cfg.pci = pci;

  try {
    return run(cmd, cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
