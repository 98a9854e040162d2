#include "bsf/group.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bsf {

namespace {

std::string format_word(const std::vector<std::pair<unsigned, unsigned>>& factors,
                        const std::vector<std::string>& gen_labels) {
  if (factors.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += gen_labels[factors[i].first];
    if (factors[i].second != 1) out += "^" + std::to_string(factors[i].second);
  }
  return out;
}

}  // namespace

unsigned FiniteGroup::element_order(unsigned a) const {
  if (a >= n) throw std::out_of_range("element index out of range");
  unsigned e = a, k = 1;
  while (e != 0) {
    e = mul(e, a);
    ++k;
    if (k > n) throw std::logic_error("element order exceeds group order");
  }
  return k;
}

bool FiniteGroup::is_central(unsigned a) const {
  for (unsigned b = 0; b < n; ++b)
    if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_abelian() const {
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void FiniteGroup::validate() const {
  if (n == 0) throw std::invalid_argument("group must be nonempty");
  if (table.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("multiplication table has wrong size");
  for (unsigned v : table)
    if (v >= n) throw std::invalid_argument("table entry out of range");
  for (unsigned a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw std::invalid_argument("element 0 is not a two-sided identity");
  // Latin-square property: every row and column is a permutation.
  for (unsigned a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (unsigned b = 0; b < n; ++b) {
      if (row[mul(a, b)]++) throw std::invalid_argument("duplicate entry in table row");
      if (col[mul(b, a)]++) throw std::invalid_argument("duplicate entry in table column");
    }
  }
  if (inv.size() != n) throw std::invalid_argument("inverse table has wrong size");
  for (unsigned a = 0; a < n; ++a)
    if (inv[a] >= n || mul(a, inv[a]) != 0 || mul(inv[a], a) != 0)
      throw std::invalid_argument("inverse table is inconsistent");
  if (labels.size() != n) throw std::invalid_argument("label list has wrong size");
  // Light's associativity test: with an identity present, checking
  // a*(s*c) == (a*s)*c for s in a generating set settles associativity.
  std::vector<unsigned> gens = greedy_generators(*this);
  for (unsigned s : gens)
    for (unsigned a = 0; a < n; ++a)
      for (unsigned c = 0; c < n; ++c)
        if (mul(mul(a, s), c) != mul(a, mul(s, c)))
          throw std::invalid_argument("multiplication table is not associative");
}

unsigned FiniteGroup::evaluate_word(const std::string& word) const {
  auto find_label = [&](const std::string& tok) -> long {
    for (auto& [lab, g] : generators)
      if (lab == tok) return static_cast<long>(g);
    for (unsigned g = 0; g < n; ++g)
      if (labels[g] == tok) return static_cast<long>(g);
    return -1;
  };
  auto power = [&](unsigned g, long long e) {
    unsigned base = e < 0 ? inverse(g) : g;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    k %= element_order(base);
    unsigned r = 0;
    for (unsigned long long i = 0; i < k; ++i) r = mul(r, base);
    return r;
  };

  std::string trimmed;
  for (char c : word)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty()) throw std::invalid_argument("empty group word");

  unsigned acc = 0;
  size_t pos = 0;
  while (pos <= trimmed.size()) {
    size_t star = trimmed.find('*', pos);
    std::string tok = trimmed.substr(pos, (star == std::string::npos ? trimmed.size() : star) - pos);
    if (tok.empty()) throw std::invalid_argument("malformed group word: " + word);
    long g = find_label(tok);
    if (g < 0) {
      size_t caret = tok.rfind('^');
      if (caret == std::string::npos || caret + 1 == tok.size())
        throw std::invalid_argument("unknown factor '" + tok + "' in group word");
      long base = find_label(tok.substr(0, caret));
      if (base < 0)
        throw std::invalid_argument("unknown factor '" + tok + "' in group word");
      long long e = 0;
      try {
        size_t used = 0;
        e = std::stoll(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument("");
      } catch (...) {
        throw std::invalid_argument("bad exponent in group word factor '" + tok + "'");
      }
      acc = mul(acc, power(static_cast<unsigned>(base), e));
    } else {
      acc = mul(acc, static_cast<unsigned>(g));
    }
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return acc;
}

bool Subgroup::contains(unsigned g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

// ----- family constructors -----

FiniteGroup cyclic(unsigned n, const std::string& gen_label) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  FiniteGroup G;
  G.name = "C" + std::to_string(n);
  G.n = n;
  G.table.resize(static_cast<size_t>(n) * n);
  G.inv.resize(n);
  G.labels.resize(n);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) G.table[a * n + b] = (a + b) % n;
    G.inv[a] = (n - a) % n;
    G.labels[a] = a == 0 ? "1" : (a == 1 ? gen_label : gen_label + "^" + std::to_string(a));
  }
  if (n > 1) G.generators.emplace_back(gen_label, 1);
  G.validate();
  return G;
}

FiniteGroup dihedral(unsigned N, const std::array<std::string, 2>& gen_labels) {
  if (N < 4 || N % 2) throw std::invalid_argument("dihedral order must be even and at least 4");
  unsigned M = N / 2;
  FiniteGroup G;
  G.name = "D" + std::to_string(N);
  G.n = N;
  G.table.resize(static_cast<size_t>(N) * N);
  G.inv.resize(N);
  G.labels.resize(N);
  auto idx = [M](unsigned a, unsigned b) { return b * M + a; };
  for (unsigned a1 = 0; a1 < M; ++a1)
    for (unsigned b1 = 0; b1 < 2; ++b1)
      for (unsigned a2 = 0; a2 < M; ++a2)
        for (unsigned b2 = 0; b2 < 2; ++b2) {
          unsigned a = b1 ? (a1 + M - a2) % M : (a1 + a2) % M;
          G.table[idx(a1, b1) * N + idx(a2, b2)] = idx(a, b1 ^ b2);
        }
  for (unsigned a = 0; a < M; ++a) {
    G.inv[idx(a, 0)] = idx((M - a) % M, 0);
    G.inv[idx(a, 1)] = idx(a, 1);
    std::string xa = a == 0 ? "" : (a == 1 ? gen_labels[0] : gen_labels[0] + "^" + std::to_string(a));
    G.labels[idx(a, 0)] = a == 0 ? "1" : xa;
    G.labels[idx(a, 1)] = a == 0 ? gen_labels[1] : xa + "*" + gen_labels[1];
  }
  G.generators.emplace_back(gen_labels[0], idx(1, 0));
  G.generators.emplace_back(gen_labels[1], idx(0, 1));
  G.validate();
  return G;
}

FiniteGroup generalized_quaternion(unsigned n) {
  if (n == 0) throw std::invalid_argument("generalized quaternion parameter must be at least 1");
  if (n > 7) throw std::invalid_argument("generalized quaternion parameter too large");
  unsigned M = 1u << (n + 1);  // order of x
  unsigned N = 2 * M;
  unsigned half = 1u << n;  // x^half = y^2
  FiniteGroup G;
  G.name = "Q" + std::to_string(N);
  G.n = N;
  G.table.resize(static_cast<size_t>(N) * N);
  G.inv.resize(N);
  G.labels.resize(N);
  auto idx = [M](unsigned a, unsigned b) { return b * M + a; };
  for (unsigned a1 = 0; a1 < M; ++a1)
    for (unsigned b1 = 0; b1 < 2; ++b1)
      for (unsigned a2 = 0; a2 < M; ++a2)
        for (unsigned b2 = 0; b2 < 2; ++b2) {
          unsigned a, b;
          if (!b1) {
            a = (a1 + a2) % M;
            b = b2;
          } else if (!b2) {
            a = (a1 + M - a2) % M;
            b = 1;
          } else {  // x^a1 y x^a2 y = x^(a1-a2) y^2 = x^(a1-a2+half)
            a = (a1 + M - a2 + half) % M;
            b = 0;
          }
          G.table[idx(a1, b1) * N + idx(a2, b2)] = idx(a, b);
        }
  for (unsigned a = 0; a < M; ++a) {
    G.inv[idx(a, 0)] = idx((M - a) % M, 0);
    // (x^a y)^-1 = y^-1 x^-a = x^half y x^(M-a)... solved directly below.
    std::string xa = a == 0 ? "" : (a == 1 ? std::string("x") : "x^" + std::to_string(a));
    G.labels[idx(a, 0)] = a == 0 ? "1" : xa;
    G.labels[idx(a, 1)] = a == 0 ? std::string("y") : xa + "*y";
  }
  for (unsigned a = 0; a < M; ++a) {
    unsigned g = idx(a, 1);
    for (unsigned h = 0; h < N; ++h)
      if (G.table[g * N + h] == 0) {
        G.inv[g] = h;
        break;
      }
  }
  G.generators.emplace_back("x", idx(1, 0));
  G.generators.emplace_back("y", idx(0, 1));
  G.validate();
  return G;
}

FiniteGroup alternating4(const std::array<std::string, 2>& gen_labels) {
  using Perm = std::array<uint8_t, 4>;
  auto compose = [](const Perm& g, const Perm& h) {  // (g*h)(i) = g(h(i))
    Perm r;
    for (int i = 0; i < 4; ++i) r[i] = g[h[i]];
    return r;
  };
  const Perm id{0, 1, 2, 3};
  const std::array<Perm, 2> gens = {Perm{1, 0, 3, 2},   // (12)(34)
                                    Perm{1, 2, 0, 3}};  // (123)
  std::vector<Perm> elems{id};
  std::vector<std::vector<std::pair<unsigned, unsigned>>> words{{}};
  for (size_t i = 0; i < elems.size(); ++i)
    for (unsigned gi = 0; gi < 2; ++gi) {
      Perm p = compose(elems[i], gens[gi]);
      if (std::find(elems.begin(), elems.end(), p) != elems.end()) continue;
      auto w = words[i];
      if (!w.empty() && w.back().first == gi)
        ++w.back().second;
      else
        w.emplace_back(gi, 1);
      elems.push_back(p);
      words.push_back(std::move(w));
    }
  if (elems.size() != 12) throw std::logic_error("alternating group enumeration failed");

  FiniteGroup G;
  G.name = "A4";
  G.n = 12;
  G.table.resize(144);
  G.inv.resize(12);
  G.labels.resize(12);
  std::vector<std::string> gl{gen_labels[0], gen_labels[1]};
  auto index_of = [&](const Perm& p) {
    return static_cast<unsigned>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  for (unsigned a = 0; a < 12; ++a) {
    G.labels[a] = format_word(words[a], gl);
    for (unsigned b = 0; b < 12; ++b) G.table[a * 12 + b] = index_of(compose(elems[a], elems[b]));
  }
  for (unsigned a = 0; a < 12; ++a)
    for (unsigned b = 0; b < 12; ++b)
      if (G.table[a * 12 + b] == 0) G.inv[a] = b;
  G.generators.emplace_back(gen_labels[0], index_of(gens[0]));
  G.generators.emplace_back(gen_labels[1], index_of(gens[1]));
  G.validate();
  return G;
}

FiniteGroup z2_times_a4() {
  FiniteGroup G = direct_product(cyclic(2, "j"), alternating4(), "Z2xA4");
  return G;
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, const std::string& name) {
  FiniteGroup G;
  G.name = name.empty() ? A.name + "x" + B.name : name;
  unsigned nA = A.n, nB = B.n;
  G.n = nA * nB;
  G.factor_a_size = nA;
  G.factor_b_size = nB;
  G.table.resize(static_cast<size_t>(G.n) * G.n);
  G.inv.resize(G.n);
  G.labels.resize(G.n);
  auto idx = [nB](unsigned a, unsigned b) { return a * nB + b; };
  for (unsigned a1 = 0; a1 < nA; ++a1)
    for (unsigned b1 = 0; b1 < nB; ++b1) {
      unsigned g1 = idx(a1, b1);
      G.inv[g1] = idx(A.inv[a1], B.inv[b1]);
      if (a1 == 0)
        G.labels[g1] = B.labels[b1];
      else if (b1 == 0)
        G.labels[g1] = A.labels[a1];
      else
        G.labels[g1] = B.labels[b1] + "*" + A.labels[a1];
      for (unsigned a2 = 0; a2 < nA; ++a2)
        for (unsigned b2 = 0; b2 < nB; ++b2)
          G.table[g1 * G.n + idx(a2, b2)] = idx(A.mul(a1, a2), B.mul(b1, b2));
    }
  for (auto& [lab, g] : B.generators) G.generators.emplace_back(lab, idx(0, g));
  for (auto& [lab, g] : A.generators) G.generators.emplace_back(lab, idx(g, 0));
  G.validate();
  return G;
}

FiniteGroup group_from_table(std::string name, unsigned order, std::vector<unsigned> table) {
  FiniteGroup G;
  G.name = std::move(name);
  G.n = order;
  G.table = std::move(table);
  if (G.table.size() != static_cast<size_t>(order) * order)
    throw std::invalid_argument("multiplication table has wrong size");
  G.inv.assign(order, 0);
  for (unsigned a = 0; a < order; ++a)
    for (unsigned b = 0; b < order; ++b)
      if (G.table[a * order + b] == 0 && G.table[b * order + a] == 0) {
        G.inv[a] = b;
        break;
      }
  G.labels.resize(order);
  G.labels[0] = "1";
  for (unsigned a = 1; a < order; ++a) G.labels[a] = "g" + std::to_string(a);
  G.validate();
  for (unsigned g : greedy_generators(G)) G.generators.emplace_back(G.labels[g], g);
  return G;
}

// ----- serialization -----

std::string group_to_text(const FiniteGroup& G) {
  std::ostringstream os;
  os << "group " << G.name << " " << G.n << "\n";
  for (unsigned a = 0; a < G.n; ++a) {
    for (unsigned b = 0; b < G.n; ++b) {
      if (b) os << " ";
      os << G.mul(a, b);
    }
    os << "\n";
  }
  return os.str();
}

FiniteGroup group_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string kw, name;
  unsigned order = 0;
  if (!(is >> kw >> name >> order) || kw != "group")
    throw std::invalid_argument("group text must start with 'group <name> <order>'");
  std::vector<unsigned> table(static_cast<size_t>(order) * order);
  for (auto& v : table)
    if (!(is >> v)) throw std::invalid_argument("group text table is truncated");
  return group_from_table(name, order, std::move(table));
}

// ----- structure -----

ConjClassPartition conjugacy_classes(const FiniteGroup& G) {
  ConjClassPartition P;
  P.class_of.assign(G.n, UINT_MAX);
  for (unsigned g = 0; g < G.n; ++g) {
    if (P.class_of[g] != UINT_MAX) continue;
    std::set<unsigned> cls;
    for (unsigned h = 0; h < G.n; ++h) cls.insert(G.mul(G.mul(h, g), G.inv[h]));
    unsigned id = static_cast<unsigned>(P.classes.size());
    for (unsigned e : cls) P.class_of[e] = id;
    P.reps.push_back(*cls.begin());
    P.classes.emplace_back(cls.begin(), cls.end());
  }
  return P;
}

std::vector<unsigned> center_elements(const FiniteGroup& G) {
  std::vector<unsigned> z;
  for (unsigned g = 0; g < G.n; ++g)
    if (G.is_central(g)) z.push_back(g);
  return z;
}

unsigned complex_conjugation_element(const FiniteGroup& G) {
  std::vector<unsigned> found;
  for (unsigned g : center_elements(G))
    if (g != 0 && G.mul(g, g) == 0) found.push_back(g);
  if (found.empty())
    throw std::invalid_argument("group has no central element of order 2");
  if (found.size() > 1)
    throw std::invalid_argument("central element of order 2 is not unique");
  return found[0];
}

Subgroup closure(const FiniteGroup& G, std::vector<unsigned> gens) {
  std::vector<char> in(G.n, 0);
  std::vector<unsigned> mem;
  std::deque<unsigned> work;
  auto add = [&](unsigned g) {
    if (!in[g]) {
      in[g] = 1;
      mem.push_back(g);
      work.push_back(g);
    }
  };
  add(0);
  for (unsigned g : gens) {
    if (g >= G.n) throw std::out_of_range("generator index out of range");
    add(g);
  }
  while (!work.empty()) {
    unsigned e = work.front();
    work.pop_front();
    for (size_t i = 0; i < mem.size(); ++i) {
      add(G.mul(mem[i], e));
      add(G.mul(e, mem[i]));
    }
  }
  std::sort(mem.begin(), mem.end());
  return Subgroup{std::move(mem)};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  if (G.n > 1000)
    throw std::invalid_argument("subgroup enumeration is limited to groups of order at most 1000");
  std::set<std::vector<unsigned>> seen;
  std::deque<std::vector<unsigned>> work;
  std::vector<unsigned> trivial{0};
  seen.insert(trivial);
  work.push_back(trivial);
  while (!work.empty()) {
    std::vector<unsigned> H = std::move(work.front());
    work.pop_front();
    for (unsigned g = 1; g < G.n; ++g) {
      if (std::binary_search(H.begin(), H.end(), g)) continue;
      std::vector<unsigned> gens = H;
      gens.push_back(g);
      Subgroup K = closure(G, std::move(gens));
      if (seen.insert(K.members).second) work.push_back(std::move(K.members));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (auto& m : seen) out.push_back(Subgroup{m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  std::vector<char> in(G.n, 0);
  for (unsigned h : H.members) in[h] = 1;
  for (unsigned g = 0; g < G.n; ++g)
    for (unsigned h : H.members)
      if (!in[G.mul(G.mul(g, h), G.inv[g])]) return false;
  return true;
}

Subgroup commutator_subgroup(const FiniteGroup& G) {
  std::vector<unsigned> gens;
  for (unsigned a = 0; a < G.n; ++a)
    for (unsigned b = 0; b < G.n; ++b)
      gens.push_back(G.mul(G.mul(a, b), G.mul(G.inv[a], G.inv[b])));
  return closure(G, std::move(gens));
}

std::vector<unsigned> greedy_generators(const FiniteGroup& G) {
  std::vector<unsigned> gens;
  std::vector<char> in(G.n, 0);
  in[0] = 1;
  size_t covered = 1;
  while (covered < G.n) {
    unsigned next = 0;
    for (unsigned g = 1; g < G.n; ++g)
      if (!in[g]) {
        next = g;
        break;
      }
    gens.push_back(next);
    Subgroup S = closure(G, gens);
    covered = S.members.size();
    std::fill(in.begin(), in.end(), 0);
    for (unsigned m : S.members) in[m] = 1;
  }
  return gens;
}

SubgroupAsGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& S) {
  SubgroupAsGroup R;
  unsigned m = S.order();
  if (m == 0 || S.members[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  R.to_parent = S.members;
  R.from_parent.assign(G.n, UINT_MAX);
  for (unsigned i = 0; i < m; ++i) R.from_parent[S.members[i]] = i;
  R.H.name = G.name + "_sub" + std::to_string(m);
  R.H.n = m;
  R.H.table.resize(static_cast<size_t>(m) * m);
  R.H.inv.resize(m);
  R.H.labels.resize(m);
  for (unsigned i = 0; i < m; ++i) {
    R.H.labels[i] = G.labels[S.members[i]];
    unsigned gi = G.inv[S.members[i]];
    if (R.from_parent[gi] == UINT_MAX)
      throw std::invalid_argument("member set is not closed under inversion");
    R.H.inv[i] = R.from_parent[gi];
    for (unsigned j = 0; j < m; ++j) {
      unsigned p = G.mul(S.members[i], S.members[j]);
      if (R.from_parent[p] == UINT_MAX)
        throw std::invalid_argument("member set is not closed under multiplication");
      R.H.table[i * m + j] = R.from_parent[p];
    }
  }
  for (unsigned g : greedy_generators(R.H)) R.H.generators.emplace_back(R.H.labels[g], g);
  R.H.validate();
  return R;
}

QuotientResult quotient(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw std::invalid_argument("quotient requires a normal subgroup");
  std::vector<unsigned> rep_of(G.n, UINT_MAX);
  std::vector<unsigned> reps;
  for (unsigned g = 0; g < G.n; ++g) {
    if (rep_of[g] != UINT_MAX) continue;
    unsigned lo = g;  // g is the smallest unassigned element, hence the coset minimum
    for (unsigned h : N.members) rep_of[G.mul(g, h)] = lo;
    reps.push_back(lo);
  }
  unsigned m = static_cast<unsigned>(reps.size());
  QuotientResult R;
  R.section = reps;
  R.projection.assign(G.n, 0);
  std::vector<unsigned> index_of_rep(G.n, UINT_MAX);
  for (unsigned i = 0; i < m; ++i) index_of_rep[reps[i]] = i;
  for (unsigned g = 0; g < G.n; ++g) R.projection[g] = index_of_rep[rep_of[g]];
  R.Q.name = G.name + "/N" + std::to_string(N.order());
  R.Q.n = m;
  R.Q.table.resize(static_cast<size_t>(m) * m);
  R.Q.inv.resize(m);
  R.Q.labels.resize(m);
  for (unsigned i = 0; i < m; ++i) {
    R.Q.labels[i] = G.labels[reps[i]];
    R.Q.inv[i] = R.projection[G.inv[reps[i]]];
    for (unsigned j = 0; j < m; ++j)
      R.Q.table[i * m + j] = R.projection[G.mul(reps[i], reps[j])];
  }
  for (auto& [lab, g] : G.generators) {
    unsigned t = R.projection[g];
    if (t == 0) continue;
    bool dup = false;
    for (auto& [l2, g2] : R.Q.generators) dup = dup || g2 == t;
    if (!dup) R.Q.generators.emplace_back(R.Q.labels[t], t);
  }
  if (R.Q.generators.empty() && m > 1)
    for (unsigned g : greedy_generators(R.Q)) R.Q.generators.emplace_back(R.Q.labels[g], g);
  R.Q.validate();
  return R;
}

QuotientResult abelianization(const FiniteGroup& G) {
  return quotient(G, commutator_subgroup(G));
}

}  // namespace bsf
