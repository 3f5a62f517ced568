#pragma once
// Finite groups materialized as explicit multiplication tables, together with
// the declarative constructors used to build them: cyclic groups, direct and
// semidirect products, permutation closures, and named catalogue entries.
// Element 0 is always the identity; subgroups are sorted element-index sets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pgroup {

using Elem = int32_t;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

// q if n = q^k for a prime q and k >= 1, nullopt otherwise.
inline std::optional<int> prime_power_base(int n) {
  if (n < 2) return std::nullopt;
  int m = n;
  for (int q = 2; static_cast<long>(q) * q <= m; ++q) {
    if (m % q == 0) {
      while (m % q == 0) m /= q;
      return m == 1 ? std::optional<int>(q) : std::nullopt;
    }
  }
  return m;  // n itself is prime
}

struct FiniteGroup {
  int n = 1;
  std::string name = "trivial";
  std::vector<Elem> table;      // row-major: table[a*n + b] = a*b
  std::vector<Elem> inverse;    // inverse[a]*a = a*inverse[a] = 0
  std::vector<Elem> generators; // some generating set (may be empty for n = 1)
  std::vector<std::string> labels;
  std::optional<int> prime;     // q when n is a power of the prime q

  Elem mul(Elem a, Elem b) const { return table[static_cast<size_t>(a) * n + b]; }
  Elem inv(Elem a) const { return inverse[a]; }

  // y^-1 x y
  Elem conjugate(Elem x, Elem y) const { return mul(mul(inv(y), x), y); }

  Elem pow(Elem x, long e) const {
    if (e < 0) { x = inv(x); e = -e; }
    Elem r = 0;
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  int order_of(Elem x) const {
    int k = 1;
    for (Elem y = x; y != 0; y = mul(y, x)) ++k;
    return k;
  }

  bool commutes(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  const std::string& label(Elem x) const { return labels[x]; }

  // Element carrying the given label, or -1.
  Elem find_label(std::string_view s) const {
    for (Elem x = 0; x < n; ++x)
      if (labels[x] == s) return x;
    return -1;
  }
};

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Elem> elements;   // sorted ascending; always contains 0
  std::vector<Elem> generators; // closure(generators) == elements

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Elem x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
  std::vector<char> mask() const {
    std::vector<char> m(parent->n, 0);
    for (Elem x : elements) m[x] = 1;
    return m;
  }
};

inline Subgroup trivial_subgroup(const FiniteGroup& G) {
  return Subgroup{&G, {0}, {}};
}

inline Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<Elem> all(G.n);
  for (Elem x = 0; x < G.n; ++x) all[x] = x;
  return Subgroup{&G, all, G.generators};
}

// Smallest subgroup containing every seed element. In a finite group the set
// of all words in the seed is already closed under inverses.
inline Subgroup closure(const FiniteGroup& G, std::vector<Elem> seed) {
  for (Elem s : seed)
    if (s < 0 || s >= G.n) fail("closure: element index out of range");
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

  std::vector<char> in(G.n, 0);
  std::vector<Elem> out;
  out.reserve(seed.size() + 1);
  in[0] = 1;
  out.push_back(0);
  for (size_t head = 0; head < out.size(); ++head) {
    Elem u = out[head];
    for (Elem s : seed) {
      Elem v = G.mul(u, s);
      if (!in[v]) {
        in[v] = 1;
        out.push_back(v);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return Subgroup{&G, std::move(out), std::move(seed)};
}

inline int element_order(const FiniteGroup& G, Elem x) {
  if (x < 0 || x >= G.n) fail("element_order: index out of range");
  return G.order_of(x);
}

// Greedy minimal-by-inclusion generating set for a subgroup's element set,
// scanning elements in ascending index order. Deterministic.
inline std::vector<Elem> minimal_generating_set(const FiniteGroup& G,
                                                const std::vector<Elem>& elements) {
  std::vector<Elem> gens;
  std::vector<char> covered(G.n, 0);
  covered[0] = 1;
  size_t covered_count = 1;
  for (Elem x : elements) {
    if (covered[x]) continue;
    gens.push_back(x);
    Subgroup c = closure(G, gens);
    for (Elem y : c.elements)
      if (!covered[y]) covered[y] = 1;
    covered_count = c.elements.size();
    if (covered_count == elements.size()) break;
  }
  return gens;
}

// Re-derives a subgroup's generators as a small canonical set.
inline Subgroup canonical_subgroup(const FiniteGroup& G, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  std::vector<Elem> gens = minimal_generating_set(G, elements);
  return Subgroup{&G, std::move(elements), std::move(gens)};
}

inline std::vector<Elem> intersect_sorted(const std::vector<Elem>& a,
                                          const std::vector<Elem>& b) {
  std::vector<Elem> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Table validation and post-construction bookkeeping.

inline void finish_group(FiniteGroup& G) {
  const int n = G.n;
  if (n <= 0 || G.table.size() != static_cast<size_t>(n) * n)
    fail("group table has wrong size");
  for (Elem v : G.table)
    if (v < 0 || v >= n) fail("group table entry out of range");
  for (Elem x = 0; x < n; ++x)
    if (G.mul(0, x) != x || G.mul(x, 0) != x)
      fail("element 0 is not a two-sided identity");
  // Latin-square property: every row and column is a permutation.
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      Elem v = G.mul(a, b);
      if (seen[v]) fail("group table row is not a permutation");
      seen[v] = 1;
    }
  }
  for (Elem b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem a = 0; a < n; ++a) {
      Elem v = G.mul(a, b);
      if (seen[v]) fail("group table column is not a permutation");
      seen[v] = 1;
    }
  }
  G.inverse.assign(n, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (G.mul(a, b) == 0) {
        if (G.mul(b, a) != 0) fail("one-sided inverse found");
        G.inverse[a] = b;
        break;
      }
    if (G.inverse[a] < 0) fail("element without inverse");
  }
  if (G.labels.size() != static_cast<size_t>(n)) {
    G.labels.resize(n);
    for (Elem x = 0; x < n; ++x) G.labels[x] = "e" + std::to_string(x);
    G.labels[0] = "1";
  }
  G.prime = prime_power_base(n);
  if (closure(G, G.generators).order() != n)
    fail("stored generators do not generate the group");
}

// ---------------------------------------------------------------------------
// Label words. Labels are products of named generator powers, e.g. "r^2*s";
// the identity is always labelled "1".

namespace detail {

using Word = std::vector<std::pair<int, int>>;  // (generator slot, exponent)

inline std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += names[w[i].first];
    if (w[i].second != 1) out += "^" + std::to_string(w[i].second);
  }
  return out;
}

}  // namespace detail

// Relabels every element with its shortest word (breadth-first, generators in
// the given order) over the named generators, and installs those generators.
inline void relabel_by_generators(FiniteGroup& G,
                                  const std::vector<std::pair<Elem, std::string>>& named) {
  std::vector<Elem> gens;
  std::vector<std::string> names;
  for (const auto& [e, nm] : named) {
    if (e <= 0 || e >= G.n) fail("relabel: generator index out of range");
    gens.push_back(e);
    names.push_back(nm);
  }
  std::vector<detail::Word> word(G.n);
  std::vector<char> have(G.n, 0);
  std::vector<Elem> queue{0};
  have[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    Elem u = queue[head];
    for (size_t j = 0; j < gens.size(); ++j) {
      Elem v = G.mul(u, gens[j]);
      if (have[v]) continue;
      have[v] = 1;
      detail::Word w = word[u];
      if (!w.empty() && w.back().first == static_cast<int>(j))
        w.back().second += 1;
      else
        w.push_back({static_cast<int>(j), 1});
      word[v] = std::move(w);
      queue.push_back(v);
    }
  }
  for (Elem x = 0; x < G.n; ++x)
    if (!have[x]) fail("relabel: named generators do not generate the group");
  for (Elem x = 0; x < G.n; ++x) G.labels[x] = detail::render_word(word[x], names);
  G.generators = gens;
}

// ---------------------------------------------------------------------------
// Constructors.

struct BuildOptions {
  int order_cap = 10000;
};

inline void check_cap(long order, const BuildOptions& opts) {
  if (order > opts.order_cap)
    fail("order cap exceeded: group of order " + std::to_string(order) +
         " over cap " + std::to_string(opts.order_cap));
}

inline FiniteGroup make_cyclic(int m, const BuildOptions& opts = {}) {
  if (m < 1) fail("cyclic order must be positive");
  check_cap(m, opts);
  FiniteGroup G;
  G.n = m;
  G.name = "C" + std::to_string(m);
  G.table.resize(static_cast<size_t>(m) * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) G.table[static_cast<size_t>(a) * m + b] = (a + b) % m;
  G.labels.resize(m);
  G.labels[0] = "1";
  for (Elem x = 1; x < m; ++x)
    G.labels[x] = x == 1 ? "g" : "g^" + std::to_string(x);
  if (m > 1) G.generators = {1};
  finish_group(G);
  return G;
}

struct DirectProductResult {
  FiniteGroup group;
  std::vector<Elem> embed_a;  // injective homomorphism A -> group
  std::vector<Elem> embed_b;  // injective homomorphism B -> group
};

inline DirectProductResult direct_product(const FiniteGroup& A, const FiniteGroup& B,
                                          const BuildOptions& opts = {}) {
  const long n = static_cast<long>(A.n) * B.n;
  check_cap(n, opts);
  FiniteGroup G;
  G.n = static_cast<int>(n);
  G.name = A.name + "x" + B.name;
  G.table.resize(static_cast<size_t>(n) * n);
  auto idx = [&](Elem a, Elem b) { return a * B.n + b; };
  for (Elem a1 = 0; a1 < A.n; ++a1)
    for (Elem b1 = 0; b1 < B.n; ++b1)
      for (Elem a2 = 0; a2 < A.n; ++a2)
        for (Elem b2 = 0; b2 < B.n; ++b2)
          G.table[static_cast<size_t>(idx(a1, b1)) * n + idx(a2, b2)] =
              idx(A.mul(a1, a2), B.mul(b1, b2));
  G.labels.resize(n);
  for (Elem a = 0; a < A.n; ++a)
    for (Elem b = 0; b < B.n; ++b)
      G.labels[idx(a, b)] = "(" + A.labels[a] + "," + B.labels[b] + ")";
  G.labels[0] = "1";
  DirectProductResult res;
  res.embed_a.resize(A.n);
  res.embed_b.resize(B.n);
  for (Elem a = 0; a < A.n; ++a) res.embed_a[a] = idx(a, 0);
  for (Elem b = 0; b < B.n; ++b) res.embed_b[b] = idx(0, b);
  for (Elem g : A.generators) G.generators.push_back(res.embed_a[g]);
  for (Elem g : B.generators) G.generators.push_back(res.embed_b[g]);
  finish_group(G);
  res.group = std::move(G);
  return res;
}

// Extends generator images to a homomorphism src -> dst, if the assignment is
// consistent with src's multiplication. The breadth-first pass assigns
// f(u*g) = f(u)*f(g) and checks it on every (element, generator) pair, which
// is a sufficient certificate for multiplicativity on all pairs.
inline std::optional<std::vector<Elem>> extend_hom(const FiniteGroup& src,
                                                   const FiniteGroup& dst,
                                                   const std::vector<Elem>& gen_images,
                                                   const std::vector<Elem>* src_gens = nullptr) {
  const std::vector<Elem>& gens = src_gens ? *src_gens : src.generators;
  if (gens.size() != gen_images.size())
    fail("extend_hom: image count does not match generator count");
  std::vector<Elem> f(src.n, -1);
  f[0] = 0;
  std::vector<Elem> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    Elem u = queue[head];
    for (size_t j = 0; j < gens.size(); ++j) {
      Elem v = src.mul(u, gens[j]);
      Elem c = dst.mul(f[u], gen_images[j]);
      if (f[v] < 0) {
        f[v] = c;
        queue.push_back(v);
      } else if (f[v] != c) {
        return std::nullopt;
      }
    }
  }
  for (Elem x = 0; x < src.n; ++x)
    if (f[x] < 0) fail("extend_hom: generators do not generate the source group");
  return f;
}

inline bool is_permutation_table(const std::vector<Elem>& f, int n) {
  std::vector<char> seen(n, 0);
  for (Elem v : f) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return f.size() == static_cast<size_t>(n);
}

// ---------------------------------------------------------------------------
// Words in base generators, used to describe semidirect actions.
// Grammar: "1" or term ('*' term)*, term = b<k> ('^' <int>)?, k a 0-based
// generator slot. Whitespace around '*' is tolerated.

inline Elem evaluate_generator_word(const FiniteGroup& G, const std::vector<Elem>& gens,
                                    const std::string& word) {
  Elem acc = 0;
  size_t i = 0;
  auto skip_ws = [&] { while (i < word.size() && word[i] == ' ') ++i; };
  skip_ws();
  if (i >= word.size()) fail("empty generator word");
  bool first = true;
  while (i < word.size()) {
    if (!first) {
      if (word[i] != '*') fail("bad generator word '" + word + "': expected '*'");
      ++i;
      skip_ws();
    }
    first = false;
    if (word[i] == '1') {
      ++i;
      skip_ws();
      continue;
    }
    if (word[i] != 'b') fail("bad generator word '" + word + "': expected b<k>");
    ++i;
    size_t start = i;
    while (i < word.size() && isdigit(static_cast<unsigned char>(word[i]))) ++i;
    if (start == i) fail("bad generator word '" + word + "': missing slot index");
    int slot = std::stoi(word.substr(start, i - start));
    if (slot < 0 || slot >= static_cast<int>(gens.size()))
      fail("bad generator word '" + word + "': slot b" + std::to_string(slot) +
           " out of range");
    long e = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      size_t es = i;
      if (i < word.size() && word[i] == '-') ++i;
      while (i < word.size() && isdigit(static_cast<unsigned char>(word[i]))) ++i;
      if (es == i || (word[es] == '-' && es + 1 == i))
        fail("bad generator word '" + word + "': missing exponent");
      e = std::stol(word.substr(es, i - es));
    }
    acc = G.mul(acc, G.pow(gens[slot], e));
    skip_ws();
  }
  return acc;
}

// Internal semidirect builder taking the automorphism's generator images
// directly. Elements are pairs (b, t), indexed t*|base| + b, so the base sits
// in the leading block. Multiplication: (b1,t1)(b2,t2) = (b1*phi^e(t1)(b2), t1 t2).
inline FiniteGroup semidirect_from_images(const FiniteGroup& base, const FiniteGroup& actor,
                                          const std::vector<Elem>& phi_images,
                                          const BuildOptions& opts = {}) {
  // The base must be abelian and the actor cyclic.
  for (size_t i = 0; i < base.generators.size(); ++i)
    for (size_t j = i + 1; j < base.generators.size(); ++j)
      if (!base.commutes(base.generators[i], base.generators[j]))
        fail("semidirect base must be abelian");
  Elem actor_gen = -1;
  for (Elem x = 0; x < actor.n && actor_gen < 0; ++x)
    if (actor.order_of(x) == actor.n) actor_gen = x;
  if (actor_gen < 0) fail("semidirect actor must be cyclic");

  auto phi0 = extend_hom(base, base, phi_images);
  if (!phi0 || !is_permutation_table(*phi0, base.n))
    fail("ill-formed semidirect action: not an automorphism of the base");
  // phi^|actor| must be the identity for the action map on the actor to be
  // well defined.
  std::vector<std::vector<Elem>> phi_pow(actor.n);
  phi_pow[0].resize(base.n);
  for (Elem b = 0; b < base.n; ++b) phi_pow[0][b] = b;
  for (int k = 1; k < actor.n; ++k) {
    phi_pow[k].resize(base.n);
    for (Elem b = 0; b < base.n; ++b) phi_pow[k][b] = (*phi0)[phi_pow[k - 1][b]];
  }
  std::vector<Elem> last(base.n);
  for (Elem b = 0; b < base.n; ++b) last[b] = (*phi0)[phi_pow[actor.n - 1][b]];
  for (Elem b = 0; b < base.n; ++b)
    if (last[b] != b)
      fail("ill-formed semidirect action: automorphism order does not divide actor order");

  // Exponent of each actor element with respect to the chosen generator.
  std::vector<int> exp_of(actor.n, -1);
  {
    Elem cur = 0;
    for (int k = 0; k < actor.n; ++k) {
      exp_of[cur] = k;
      cur = actor.mul(cur, actor_gen);
    }
  }

  const long n = static_cast<long>(base.n) * actor.n;
  check_cap(n, opts);
  FiniteGroup G;
  G.n = static_cast<int>(n);
  G.name = "(" + base.name + "):" + actor.name;
  G.table.resize(static_cast<size_t>(n) * n);
  auto idx = [&](Elem b, Elem t) { return t * base.n + b; };
  for (Elem t1 = 0; t1 < actor.n; ++t1) {
    const std::vector<Elem>& act = phi_pow[exp_of[t1]];
    for (Elem b1 = 0; b1 < base.n; ++b1)
      for (Elem t2 = 0; t2 < actor.n; ++t2)
        for (Elem b2 = 0; b2 < base.n; ++b2)
          G.table[static_cast<size_t>(idx(b1, t1)) * n + idx(b2, t2)] =
              idx(base.mul(b1, act[b2]), actor.mul(t1, t2));
  }
  G.labels.resize(n);
  for (Elem t = 0; t < actor.n; ++t)
    for (Elem b = 0; b < base.n; ++b)
      G.labels[idx(b, t)] = "(" + base.labels[b] + "," + actor.labels[t] + ")";
  G.labels[0] = "1";
  for (Elem g : base.generators) G.generators.push_back(idx(g, 0));
  G.generators.push_back(idx(0, actor_gen));
  finish_group(G);
  return G;
}

inline FiniteGroup semidirect_product(const FiniteGroup& base, const FiniteGroup& actor,
                                      const std::vector<std::vector<std::string>>& action,
                                      const BuildOptions& opts = {}) {
  if (action.size() != 1)
    fail("semidirect action must list images for exactly one actor generator");
  if (action[0].size() != base.generators.size())
    fail("semidirect action must give one word per base generator");
  std::vector<Elem> images;
  for (const std::string& w : action[0])
    images.push_back(evaluate_generator_word(base, base.generators, w));
  return semidirect_from_images(base, actor, images, opts);
}

// ---------------------------------------------------------------------------
// Permutation groups from cycle notation, closed under composition.
// Product acts by composition: (s*t)(point) = s(t(point)).

namespace detail {

inline std::vector<int> parse_cycles(const std::string& text, int degree) {
  std::vector<int> perm(degree);
  for (int i = 0; i < degree; ++i) perm[i] = i;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  skip_ws();
  if (i >= text.size()) fail("empty permutation");
  std::vector<char> used(degree, 0);
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') fail("bad cycle notation '" + text + "'");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') { ++i; break; }
      size_t start = i;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("bad cycle notation '" + text + "'");
      int pt = std::stoi(text.substr(start, i - start));
      if (pt < 1 || pt > degree)
        fail("permutation point " + std::to_string(pt) +
             " inconsistent with degree " + std::to_string(degree));
      if (used[pt - 1]) fail("point repeated in permutation '" + text + "'");
      used[pt - 1] = 1;
      cyc.push_back(pt - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return perm;
}

inline std::string cycle_label(const std::vector<int>& perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      first = false;
      out += std::to_string(j + 1);
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

}  // namespace detail

inline FiniteGroup permutation_group(int degree, const std::vector<std::string>& gens,
                                     const BuildOptions& opts = {}) {
  if (degree < 1) fail("permutation degree must be positive");
  if (gens.empty()) fail("permutation group needs at least one generator");
  std::vector<std::vector<int>> gen_perms;
  for (const std::string& s : gens) gen_perms.push_back(detail::parse_cycles(s, degree));

  std::vector<int> ident(degree);
  for (int i = 0; i < degree; ++i) ident[i] = i;
  std::vector<std::vector<int>> elems{ident};
  std::map<std::vector<int>, Elem> index{{ident, 0}};
  std::vector<Elem> gen_idx;
  for (size_t head = 0; head < elems.size(); ++head) {
    std::vector<int> cur = elems[head];  // copy: elems may reallocate below
    for (const auto& g : gen_perms) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = cur[g[i]];  // (cur*g)(i) = cur(g(i))
      if (index.emplace(prod, static_cast<Elem>(elems.size())).second) {
        elems.push_back(prod);
        check_cap(static_cast<long>(elems.size()), opts);
      }
    }
  }
  for (const auto& g : gen_perms) gen_idx.push_back(index.at(g));

  FiniteGroup G;
  G.n = static_cast<int>(elems.size());
  G.name = "Perm" + std::to_string(degree);
  G.table.resize(static_cast<size_t>(G.n) * G.n);
  for (Elem a = 0; a < G.n; ++a)
    for (Elem b = 0; b < G.n; ++b) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
      G.table[static_cast<size_t>(a) * G.n + b] = index.at(prod);
    }
  G.labels.resize(G.n);
  for (Elem x = 0; x < G.n; ++x) G.labels[x] = detail::cycle_label(elems[x]);
  for (Elem g : gen_idx)
    if (g != 0) G.generators.push_back(g);
  finish_group(G);
  return G;
}

// ---------------------------------------------------------------------------
// Declarative group descriptions.

enum class SpecKind { Cyclic, DirectProduct, Semidirect, Permutation, Builtin };

struct GroupSpec {
  SpecKind kind = SpecKind::Cyclic;
  int order = 1;                                   // cyclic
  std::vector<GroupSpec> factors;                  // direct_product; semidirect [base, actor]
  std::vector<std::vector<std::string>> action;    // semidirect
  int degree = 0;                                  // permutation
  std::vector<std::string> perm_generators;        // permutation
  std::string name;                                // builtin
};

inline GroupSpec cyclic_spec(int order) {
  GroupSpec s;
  s.kind = SpecKind::Cyclic;
  s.order = order;
  return s;
}

inline GroupSpec builtin_spec(std::string name) {
  GroupSpec s;
  s.kind = SpecKind::Builtin;
  s.name = std::move(name);
  return s;
}

// Defined by the catalogue (catalogue.hpp); declared here so build_group can
// resolve builtin nodes.
FiniteGroup build_builtin(std::string_view name, const BuildOptions& opts);

inline FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& opts = {}) {
  switch (spec.kind) {
    case SpecKind::Cyclic:
      return make_cyclic(spec.order, opts);
    case SpecKind::DirectProduct: {
      if (spec.factors.empty()) fail("direct_product needs at least one factor");
      FiniteGroup acc = build_group(spec.factors[0], opts);
      for (size_t i = 1; i < spec.factors.size(); ++i) {
        FiniteGroup next = build_group(spec.factors[i], opts);
        acc = direct_product(acc, next, opts).group;
      }
      return acc;
    }
    case SpecKind::Semidirect: {
      if (spec.factors.size() != 2) fail("semidirect needs a base and an actor");
      FiniteGroup base = build_group(spec.factors[0], opts);
      FiniteGroup actor = build_group(spec.factors[1], opts);
      return semidirect_product(base, actor, spec.action, opts);
    }
    case SpecKind::Permutation:
      return permutation_group(spec.degree, spec.perm_generators, opts);
    case SpecKind::Builtin:
      return build_builtin(spec.name, opts);
  }
  fail("unknown group spec kind");
}

// ---------------------------------------------------------------------------
// Subgroups as standalone groups, and quotients by normal subgroups.

// Returns (H, to_parent) where to_parent maps local indices to parent indices.
inline std::pair<FiniteGroup, std::vector<Elem>> subgroup_as_group(const Subgroup& S) {
  const FiniteGroup& P = *S.parent;
  const int m = S.order();
  std::vector<Elem> to_parent = S.elements;  // sorted, so local 0 is parent 0
  std::vector<Elem> local(P.n, -1);
  for (int i = 0; i < m; ++i) local[to_parent[i]] = i;
  FiniteGroup H;
  H.n = m;
  H.name = "sub" + std::to_string(m) + "(" + P.name + ")";
  H.table.resize(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Elem v = local[P.mul(to_parent[a], to_parent[b])];
      if (v < 0) fail("subgroup_as_group: element set is not closed");
      H.table[static_cast<size_t>(a) * m + b] = v;
    }
  H.labels.resize(m);
  for (int i = 0; i < m; ++i) H.labels[i] = P.labels[to_parent[i]];
  for (Elem g : S.generators) H.generators.push_back(local[g]);
  finish_group(H);
  return {std::move(H), std::move(to_parent)};
}

// Returns (Q, proj) with proj mapping each parent element to its coset index.
// Coset representatives are the minimal elements; the identity coset is 0.
inline std::pair<FiniteGroup, std::vector<Elem>> quotient_group(const FiniteGroup& G,
                                                                const Subgroup& N) {
  for (Elem g : G.generators)
    for (Elem v : N.elements)
      if (!N.contains(G.conjugate(v, g)))
        fail("quotient by a non-normal subgroup");
  std::vector<Elem> rep(G.n);
  for (Elem x = 0; x < G.n; ++x) {
    Elem r = x;
    for (Elem v : N.elements) r = std::min(r, G.mul(x, v));
    rep[x] = r;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < G.n; ++x)
    if (rep[x] == x) reps.push_back(x);
  const int m = static_cast<int>(reps.size());
  std::vector<Elem> coset_of(G.n, -1);
  for (int i = 0; i < m; ++i) coset_of[reps[i]] = i;
  std::vector<Elem> proj(G.n);
  for (Elem x = 0; x < G.n; ++x) proj[x] = coset_of[rep[x]];

  FiniteGroup Q;
  Q.n = m;
  Q.name = G.name + "/" + std::to_string(N.order());
  Q.table.resize(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      Q.table[static_cast<size_t>(a) * m + b] = proj[G.mul(reps[a], reps[b])];
  Q.labels.resize(m);
  for (int i = 0; i < m; ++i) Q.labels[i] = "[" + G.labels[reps[i]] + "]";
  Q.labels[0] = "1";
  for (Elem g : G.generators) {
    Elem img = proj[g];
    if (img != 0 &&
        std::find(Q.generators.begin(), Q.generators.end(), img) == Q.generators.end())
      Q.generators.push_back(img);
  }
  finish_group(Q);
  return {std::move(Q), std::move(proj)};
}

}  // namespace pgroup
