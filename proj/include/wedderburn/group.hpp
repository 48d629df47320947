#pragma once

// Finite groups as dense Cayley tables. Elements are numbered in breadth-first
// order over generator words starting from the identity (index 0); every
// element carries the shortest such word as its label.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "wedderburn/error.hpp"
#include "wedderburn/numtheory.hpp"

namespace wedderburn {

using Perm = std::vector<int>;  // 0-based images; (a*b)(i) = b[a[i]]

inline constexpr int kDefaultOrderBound = 5000;

class Group {
 public:
  Group() = default;

  /// From a full multiplication table; validates the group axioms.
  Group(std::string name, int order, std::vector<int> table, std::vector<std::string> labels,
        std::vector<int> generators, std::vector<std::string> generator_names)
      : name_(std::move(name)),
        n_(order),
        table_(std::move(table)),
        labels_(std::move(labels)),
        gens_(std::move(generators)),
        gen_names_(std::move(generator_names)) {
    validate();
  }

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int a, int g) const { return mul(inv_[g], mul(a, g)); }  // g^-1 a g
  int pow(int a, long long k) const {
    k = nt::mod(k, elem_order_[a]);
    int r = 0;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  int element_order(int a) const { return elem_order_[a]; }
  int exponent() const { return exponent_; }
  bool abelian() const {
    for (int a : gens_)
      for (int b : gens_)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<int>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }

  /// Index of the element with the given label, or -1.
  int find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
  }

 private:
  void validate() {
    if (n_ < 1 || table_.size() != static_cast<std::size_t>(n_) * n_)
      fail(ErrorKind::InvalidTable, "table size mismatch");
    for (int a = 0; a < n_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a) fail(ErrorKind::InvalidTable, "index 0 is not the identity");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
      std::vector<char> seen(n_, 0);
      for (int b = 0; b < n_; ++b) {
        int c = mul(a, b);
        if (c < 0 || c >= n_ || seen[c]) fail(ErrorKind::InvalidTable, "row is not a permutation");
        seen[c] = 1;
        if (c == 0) inv_[a] = b;
      }
    }
    for (int a = 0; a < n_; ++a)
      if (mul(inv_[a], a) != 0) fail(ErrorKind::InvalidTable, "inverse is not two-sided");
    auto assoc = [&](int a, int b, int c) {
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(ErrorKind::InvalidTable, "multiplication is not associative");
    };
    if (n_ <= 64) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          for (int c = 0; c < n_; ++c) assoc(a, b, c);
    } else {
      std::mt19937_64 rng(0);
      std::uniform_int_distribution<int> d(0, n_ - 1);
      for (int t = 0; t < 10000; ++t) assoc(d(rng), d(rng), d(rng));
    }
    // generation
    std::vector<char> reached(n_, 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int g : gens_) {
        int b = mul(a, g);
        if (!reached[b]) {
          reached[b] = 1;
          stack.push_back(b);
        }
      }
    }
    if (std::count(reached.begin(), reached.end(), 1) != n_)
      fail(ErrorKind::InvalidTable, "generators do not generate the group");
    elem_order_.assign(n_, 1);
    exponent_ = 1;
    for (int a = 0; a < n_; ++a) {
      int x = a, k = 1;
      while (x != 0) {
        x = mul(x, a);
        ++k;
      }
      elem_order_[a] = k;
      exponent_ = static_cast<int>(nt::lcm(exponent_, k));
    }
  }

  std::string name_;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::vector<int> gens_;
  std::vector<std::string> gen_names_;
  std::vector<int> elem_order_;
  int exponent_ = 1;
};

namespace detail {

inline std::string word_label(const std::vector<std::pair<int, int>>& word, const std::vector<std::string>& names) {
  if (word.empty()) return "1";
  std::string s;
  for (auto [g, k] : word) {
    if (!s.empty()) s += "*";
    s += names[g];
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace detail

/// Closure of permutation generators. Elements are numbered breadth-first over
/// words (new element = current * generator, generators in the given order).
inline Group from_permutations(int degree, const std::vector<Perm>& gens, std::vector<std::string> names = {},
                               std::string name = "", int order_bound = kDefaultOrderBound) {
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != degree) fail(ErrorKind::NonBijective, "generator has wrong degree");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v]) fail(ErrorKind::NonBijective, "generator is not a bijection");
      seen[v] = 1;
    }
  }
  if (names.empty())
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("g" + std::to_string(i + 1));
  const int ngen = static_cast<int>(gens.size());
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, int> index{{id, 0}};
  std::vector<Perm> elems{id};
  std::vector<std::vector<std::pair<int, int>>> words{{}};
  std::vector<int> parent{-1}, via{-1};
  std::vector<std::vector<int>> right;  // right[i][g] = elems[i] * gens[g]
  for (std::size_t i = 0; i < elems.size(); ++i) {
    right.emplace_back(ngen);
    for (int g = 0; g < ngen; ++g) {
      Perm p(degree);
      for (int v = 0; v < degree; ++v) p[v] = gens[g][elems[i][v]];
      auto it = index.find(p);
      if (it != index.end()) {
        right[i][g] = it->second;
        continue;
      }
      int id_new = static_cast<int>(elems.size());
      if (id_new >= order_bound) fail(ErrorKind::OrderBoundExceeded, "group order exceeds bound " + std::to_string(order_bound));
      index.emplace(p, id_new);
      elems.push_back(std::move(p));
      auto w = words[i];
      if (!w.empty() && w.back().first == g) ++w.back().second;
      else w.push_back({g, 1});
      words.push_back(std::move(w));
      parent.push_back(static_cast<int>(i));
      via.push_back(g);
      right[i][g] = id_new;
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    table[static_cast<std::size_t>(a) * n] = a;
    for (int b = 1; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = right[table[static_cast<std::size_t>(a) * n + parent[b]]][via[b]];
  }
  std::vector<std::string> labels;
  for (auto& w : words) labels.push_back(detail::word_label(w, names));
  std::vector<int> gen_idx;
  for (int g = 0; g < ngen; ++g) gen_idx.push_back(right[0][g]);
  return Group(std::move(name), n, std::move(table), std::move(labels), std::move(gen_idx), std::move(names));
}

/// Permutation from 1-based cycles.
inline Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> used(degree, 0);
  for (auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i] - 1, b = c[(i + 1) % c.size()] - 1;
      if (a < 0 || a >= degree || b < 0 || b >= degree || used[a])
        fail(ErrorKind::NonBijective, "cycle entries out of range or repeated");
      used[a] = 1;
      p[a] = b;
    }
  return p;
}

// ---------------------------------------------------------------------------

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  ///< sorted members
  std::vector<int> representatives;       ///< minimal member
  std::vector<int> sizes;
  std::vector<int> class_of;

  int count() const { return static_cast<int>(classes.size()); }
};

/// Classes ordered by (size, minimal element index).
inline ConjugacyClasses conjugacy_classes(const Group& G) {
  const int n = G.order();
  std::vector<int> mark(n, -1);
  std::vector<std::vector<int>> cls;
  for (int a = 0; a < n; ++a) {
    if (mark[a] >= 0) continue;
    std::vector<int> orbit{a};
    mark[a] = static_cast<int>(cls.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int g : G.generators()) {
        int b = G.conj(orbit[i], g);
        if (mark[b] < 0) {
          mark[b] = mark[a];
          orbit.push_back(b);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    cls.push_back(std::move(orbit));
  }
  std::stable_sort(cls.begin(), cls.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x[0] < y[0];
  });
  ConjugacyClasses out;
  out.class_of.assign(n, -1);
  for (std::size_t k = 0; k < cls.size(); ++k) {
    out.representatives.push_back(cls[k][0]);
    out.sizes.push_back(static_cast<int>(cls[k].size()));
    for (int a : cls[k]) out.class_of[a] = static_cast<int>(k);
  }
  out.classes = std::move(cls);
  return out;
}

// ---------------------------------------------------------------------------

/// A subgroup, carried both as an index set of the parent and as a group in
/// its own right (elements numbered in increasing parent order).
struct Subgroup {
  std::vector<int> members;     ///< sorted parent indices
  std::vector<int> from_parent; ///< parent index -> subgroup index, or -1
  Group group;
  int lift = -1;                ///< minimal element of G \ H
  std::vector<int> transversal; ///< 1, x, ..., x^{p-1}
  int index = 0;

  bool contains(int a) const { return from_parent[a] >= 0; }
  int to_parent(int h) const { return members[h]; }
};

inline Subgroup make_subgroup(const Group& G, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup S;
  const int m = static_cast<int>(members.size());
  if (m == 0 || members[0] != 0 || G.order() % m != 0) fail(ErrorKind::BadParams, "not a subgroup");
  S.members = members;
  S.from_parent.assign(G.order(), -1);
  for (int i = 0; i < m; ++i) S.from_parent[members[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int c = S.from_parent[G.mul(members[i], members[j])];
      if (c < 0) fail(ErrorKind::BadParams, "subset is not closed under multiplication");
      table[static_cast<std::size_t>(i) * m + j] = c;
    }
  // greedy generating set in index order
  std::vector<int> gens;
  std::vector<char> span(m, 0);
  span[0] = 1;
  auto close = [&] {
    std::vector<int> st;
    for (int i = 0; i < m; ++i)
      if (span[i]) st.push_back(i);
    while (!st.empty()) {
      int a = st.back();
      st.pop_back();
      for (int g : gens) {
        int b = table[static_cast<std::size_t>(a) * m + g];
        if (!span[b]) {
          span[b] = 1;
          st.push_back(b);
        }
      }
    }
  };
  for (int i = 1; i < m; ++i)
    if (!span[i]) {
      gens.push_back(i);
      close();
    }
  std::vector<std::string> labels, gnames;
  for (int a : members) labels.push_back(G.label(a));
  for (int g : gens) gnames.push_back(G.label(g));
  S.group = Group(G.name().empty() ? "" : G.name() + "_sub", m, std::move(table), std::move(labels), gens, gnames);
  S.index = G.order() / m;
  for (int a = 0; a < G.order(); ++a)
    if (!S.contains(a)) {
      S.lift = a;
      break;
    }
  if (S.lift >= 0)
    for (int i = 0, x = 0; i < S.index; ++i, x = G.mul(x, S.lift)) S.transversal.push_back(x);
  else
    S.transversal = {0};
  return S;
}

inline bool is_normal(const Group& G, const Subgroup& H) {
  for (int h : H.members)
    for (int g : G.generators())
      if (!H.contains(G.conj(h, g))) return false;
  return true;
}

/// Kernels of the nontrivial homomorphisms G -> Z/p, in lexicographic order of
/// member lists, each with lift x = least element outside.
inline std::vector<Subgroup> prime_index_normal_subgroups(const Group& G, int p) {
  std::vector<Subgroup> out;
  if (!nt::is_prime(p) || G.order() % p != 0) return out;
  const auto& gens = G.generators();
  const int ng = static_cast<int>(gens.size());
  // word structure: each non-identity element = some earlier element * generator
  const int n = G.order();
  std::vector<int> parent(n, -1), via(n, -1), order{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int g = 0; g < ng; ++g) {
      int b = G.mul(order[i], gens[g]);
      if (!seen[b]) {
        seen[b] = 1;
        parent[b] = order[i];
        via[b] = g;
        order.push_back(b);
      }
    }
  std::vector<std::vector<int>> kernels;
  std::vector<int> v(ng, 0);
  long long total = 1;
  for (int i = 0; i < ng; ++i) total *= p;
  for (long long code = 1; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < ng; ++i) {
      v[i] = static_cast<int>(c % p);
      c /= p;
    }
    std::vector<int> val(n, 0);
    for (std::size_t i = 1; i < order.size(); ++i) {
      int b = order[i];
      val[b] = (val[parent[b]] + v[via[b]]) % p;
    }
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (int b = 0; b < n; ++b)
        if (val[G.mul(a, b)] != (val[a] + val[b]) % p) {
          hom = false;
          break;
        }
    if (!hom) continue;
    std::vector<int> ker;
    for (int a = 0; a < n; ++a)
      if (val[a] == 0) ker.push_back(a);
    if (std::find(kernels.begin(), kernels.end(), ker) == kernels.end()) kernels.push_back(ker);
  }
  std::sort(kernels.begin(), kernels.end());
  for (auto& k : kernels) out.push_back(make_subgroup(G, k));
  return out;
}

/// All normal subgroups of prime index, primes increasing.
inline std::vector<Subgroup> all_prime_index_normal_subgroups(const Group& G) {
  std::vector<Subgroup> out;
  for (auto p : nt::prime_factors(G.order()))
    for (auto& H : prime_index_normal_subgroups(G, static_cast<int>(p))) out.push_back(std::move(H));
  return out;
}

/// Default choice: the first subgroup containing every generator but the last.
inline int auto_subgroup(const Group& G, const std::vector<Subgroup>& subs) {
  if (subs.empty()) fail(ErrorKind::BadParams, "group has no normal subgroup of prime index");
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    bool ok = true;
    for (std::size_t g = 0; g + 1 < gens.size(); ++g)
      if (!subs[i].contains(gens[g])) ok = false;
    if (ok) return static_cast<int>(i);
  }
  return 0;
}

}  // namespace wedderburn
