#include "bsf/character.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bsf {

namespace {

unsigned root_of_unity_order(const Cyclotomic& v) {
  Cyclotomic w = v;
  unsigned r = 1;
  const unsigned guard = 2 * v.order() + 2;
  while (!(w == Cyclotomic(1))) {
    w *= v;
    if (++r > guard) throw std::invalid_argument("value is not a root of unity");
  }
  return r;
}

unsigned discrete_log(const Cyclotomic& v, unsigned r) {
  for (unsigned k = 0; k < r; ++k)
    if (Cyclotomic::zeta(r, k) == v) return k;
  throw std::invalid_argument("discrete logarithm not found");
}

// All homomorphisms A -> C^* of an abelian group, each as a full value
// vector indexed by element. Extension order is deterministic: the smallest
// element outside the generated subgroup is adjoined next, and the d
// extension choices z = zeta_{dr}^{a+jr} are taken with j ascending.
std::vector<std::vector<Cyclotomic>> abelian_homs(const FiniteGroup& A) {
  if (!A.is_abelian())
    throw std::invalid_argument("homomorphism enumeration requires an abelian group");
  struct Partial {
    std::vector<unsigned> mem;  // sorted
    std::vector<Cyclotomic> val;
  };
  std::vector<Partial> parts(1);
  parts[0].mem = {0};
  parts[0].val.assign(A.n, Cyclotomic(0));
  parts[0].val[0] = Cyclotomic(1);

  while (parts[0].mem.size() < A.n) {
    const std::vector<unsigned>& mem0 = parts[0].mem;
    unsigned g = 0;
    for (unsigned c = 1; c < A.n; ++c)
      if (!std::binary_search(mem0.begin(), mem0.end(), c)) {
        g = c;
        break;
      }
    unsigned d = 1, gd = g;
    while (!std::binary_search(mem0.begin(), mem0.end(), gd)) {
      gd = A.mul(gd, g);
      ++d;
    }
    std::vector<Partial> next;
    next.reserve(parts.size() * d);
    for (Partial& p : parts) {
      const Cyclotomic v = p.val[gd];
      const unsigned r = root_of_unity_order(v);
      const unsigned a = discrete_log(v, r);
      for (unsigned j = 0; j < d; ++j) {
        Partial q;
        q.val = p.val;
        q.mem = p.mem;
        Cyclotomic z = Cyclotomic::zeta(d * r, a + j * r);
        Cyclotomic zt(1);
        unsigned gt = 0;
        for (unsigned t = 1; t < d; ++t) {
          zt *= z;
          gt = A.mul(gt, g);
          for (unsigned m : p.mem) {
            unsigned e = A.mul(m, gt);
            q.val[e] = p.val[m] * zt;
            q.mem.push_back(e);
          }
        }
        std::sort(q.mem.begin(), q.mem.end());
        next.push_back(std::move(q));
      }
    }
    parts = std::move(next);
  }
  if (parts.size() != A.n)
    throw std::logic_error("abelian character count does not match group order");
  std::vector<std::vector<Cyclotomic>> out;
  out.reserve(parts.size());
  for (Partial& p : parts) out.push_back(std::move(p.val));
  return out;
}

bool is_odd_prime(unsigned p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Character make_degree_one_row(GroupPtr G, ClassesPtr cls,
                              const std::vector<Cyclotomic>& per_element) {
  Character chi;
  chi.group = G;
  chi.classes = cls;
  for (unsigned rep : cls->reps) chi.values.push_back(per_element[rep]);
  Subgroup whole;
  whole.members.resize(G->n);
  std::iota(whole.members.begin(), whole.members.end(), 0);
  chi.witness = MonomialWitness{std::move(whole), per_element};
  return chi;
}

void name_rows(std::vector<Character>& rows) {
  for (size_t i = 0; i < rows.size(); ++i) rows[i].name = "chi" + std::to_string(i + 1);
}

}  // namespace

ClassesPtr make_classes(const GroupPtr& G) {
  return std::make_shared<const ConjClassPartition>(conjugacy_classes(*G));
}

unsigned Character::degree() const {
  const Cyclotomic& v = values.at(0);
  if (!v.is_rational()) throw std::logic_error("character degree is not rational");
  Rational q = v.rational_value();
  if (!is_integer(q)) throw std::logic_error("character degree is not an integer");
  long long d = to_long_checked(boost::multiprecision::numerator(q));
  if (d <= 0) throw std::logic_error("character degree is not positive");
  return static_cast<unsigned>(d);
}

bool Character::same_values(const Character& other) const {
  if (values.size() != other.values.size()) return false;
  for (size_t i = 0; i < values.size(); ++i)
    if (!(values[i] == other.values[i])) return false;
  return true;
}

int compare_cyclotomic(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned ma = a.minimal_field_order(), mb = b.minimal_field_order();
  if (ma != mb) return ma < mb ? -1 : 1;
  unsigned L = std::lcm(a.order(), b.order());
  std::vector<Rational> ca = a.embedded(L).coords(), cb = b.embedded(L).coords();
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] < cb[i]) return -1;
    if (cb[i] < ca[i]) return 1;
  }
  return 0;
}

std::vector<std::vector<Cyclotomic>> degree_one_value_vectors(const FiniteGroup& H) {
  if (H.is_abelian()) return abelian_homs(H);
  QuotientResult ab = abelianization(H);
  std::vector<std::vector<Cyclotomic>> homs = abelian_homs(ab.Q);
  std::vector<std::vector<Cyclotomic>> out;
  out.reserve(homs.size());
  for (auto& hv : homs) {
    std::vector<Cyclotomic> val(H.n);
    for (unsigned h = 0; h < H.n; ++h) val[h] = hv[ab.projection[h]];
    out.push_back(std::move(val));
  }
  return out;
}

Character induce(GroupPtr G, ClassesPtr cls, const Subgroup& H,
                 const std::vector<Cyclotomic>& phi) {
  const FiniteGroup& g = *G;
  if (phi.size() != H.members.size())
    throw std::invalid_argument("inducing character has wrong number of values");
  std::vector<long> pos(g.n, -1);
  for (size_t i = 0; i < H.members.size(); ++i) pos[H.members[i]] = static_cast<long>(i);
  Character chi;
  chi.group = G;
  chi.classes = cls;
  const Cyclotomic scale{Rational(1, static_cast<long long>(H.members.size()))};
  for (unsigned rep : cls->reps) {
    Cyclotomic sum(0);
    for (unsigned t = 0; t < g.n; ++t) {
      unsigned c = g.mul(g.mul(g.inverse(t), rep), t);
      if (pos[c] >= 0) sum += phi[pos[c]];
    }
    chi.values.push_back(sum * scale);
  }
  chi.witness = MonomialWitness{H, phi};
  return chi;
}

std::vector<Cyclotomic> restrict_to_subgroup(const Character& chi, const Subgroup& H) {
  std::vector<Cyclotomic> out;
  out.reserve(H.members.size());
  for (unsigned h : H.members) out.push_back(chi.value_on(h));
  return out;
}

Character inflate(const Character& chiQ, const QuotientResult& q, GroupPtr G, ClassesPtr cls) {
  Character chi;
  chi.group = G;
  chi.classes = cls;
  for (unsigned rep : cls->reps) chi.values.push_back(chiQ.value_on(q.projection[rep]));
  if (chi.degree() == 1) {
    std::vector<Cyclotomic> per_element(G->n);
    for (unsigned g = 0; g < G->n; ++g) per_element[g] = chiQ.value_on(q.projection[g]);
    chi = make_degree_one_row(G, cls, per_element);
  }
  return chi;
}

Rational inner_product(const Character& a, const Character& b) {
  if (a.classes->count() != b.classes->count())
    throw std::invalid_argument("inner product requires characters of the same group");
  Cyclotomic sum(0);
  for (unsigned c = 0; c < a.classes->count(); ++c) {
    Cyclotomic term = a.values[c] * b.values[c].conjugate();
    sum += term * Cyclotomic(static_cast<long long>(a.classes->classes[c].size()));
  }
  Cyclotomic result = sum * Cyclotomic(Rational(1, static_cast<long long>(a.group->n)));
  if (!result.is_rational())
    throw std::logic_error("character inner product is not rational");
  return result.rational_value();
}

Rational inner_product_elementwise(const FiniteGroup& H, const std::vector<Cyclotomic>& a,
                                   const std::vector<Cyclotomic>& b) {
  if (a.size() != H.n || b.size() != H.n)
    throw std::invalid_argument("value vectors must cover the whole group");
  Cyclotomic sum(0);
  for (unsigned h = 0; h < H.n; ++h) sum += a[h] * b[h].conjugate();
  Cyclotomic result = sum * Cyclotomic(Rational(1, static_cast<long long>(H.n)));
  if (!result.is_rational())
    throw std::logic_error("class function inner product is not rational");
  return result.rational_value();
}

Character conjugate_character(const Character& chi) {
  Character out = chi;
  for (Cyclotomic& v : out.values) v = v.conjugate();
  if (out.witness)
    for (Cyclotomic& v : out.witness->phi) v = v.conjugate();
  return out;
}

std::vector<Character> galois_orbit(const Character& chi) {
  unsigned N = 1;
  for (const Cyclotomic& v : chi.values) N = std::lcm(N, v.minimal_field_order());
  std::vector<Character> orbit;
  for (unsigned a = 1; a <= N; ++a) {
    if (std::gcd(a, N) != 1) continue;
    GaloisAutomorphism s(a, N);
    Character img = chi;
    for (Cyclotomic& v : img.values) v = v.apply(s);
    bool seen = false;
    for (const Character& o : orbit) seen = seen || o.same_values(img);
    if (seen) continue;
    if (img.witness) {
      // Transport the witness: lift a to an exponent coprime to the ambient
      // order of the inducing character's values; inducing the transported
      // degree-1 character reproduces the transported row.
      unsigned Nphi = 1;
      for (const Cyclotomic& v : img.witness->phi) Nphi = std::lcm(Nphi, v.minimal_field_order());
      unsigned L = std::lcm(N, Nphi);
      unsigned lift = a;
      while (std::gcd(lift, L) != 1) lift += N;
      GaloisAutomorphism sl(lift, L);
      for (Cyclotomic& v : img.witness->phi) v = v.apply(sl);
    }
    orbit.push_back(std::move(img));
  }
  return orbit;
}

CyclotomicSubfield character_field(const Character& chi) {
  unsigned N = 1;
  for (const Cyclotomic& v : chi.values) N = std::lcm(N, v.minimal_field_order());
  unsigned f = N;
  for (unsigned d : divisors_of(N)) {
    if (d % 4 == 2) continue;
    bool all = true;
    for (const Cyclotomic& v : chi.values) all = all && v.lies_in(d);
    if (all) {
      f = d;
      break;
    }
  }
  CyclotomicSubfield K;
  K.conductor = f;
  K.stabilizer.clear();
  for (unsigned a = 1; a <= f; ++a) {
    if (std::gcd(a, f) != 1) continue;
    GaloisAutomorphism s(a, f);
    bool fixes = true;
    for (const Cyclotomic& v : chi.values) fixes = fixes && v.apply(s) == v;
    if (fixes) K.stabilizer.push_back(a);
  }
  return K;
}

bool is_odd(const Character& chi) {
  unsigned j = complex_conjugation_element(*chi.group);
  return chi.value_on(j) == Cyclotomic(-static_cast<long long>(chi.degree()));
}

std::vector<Character> irreducible_characters_monomial(GroupPtr G) {
  ClassesPtr cls = make_classes(G);
  std::vector<Subgroup> subs = all_subgroups(*G);
  std::vector<Character> found;
  BigInt degsq = 0;
  const BigInt target = G->n;
  for (const Subgroup& S : subs) {
    if (degsq == target) break;
    SubgroupAsGroup HG = subgroup_as_group(*G, S);
    for (const std::vector<Cyclotomic>& phi : degree_one_value_vectors(HG.H)) {
      Character chi = induce(G, cls, S, phi);
      if (inner_product(chi, chi) != Rational(1)) continue;
      bool dup = false;
      for (const Character& f : found) dup = dup || f.same_values(chi);
      if (dup) continue;
      degsq += BigInt(chi.degree()) * chi.degree();
      found.push_back(std::move(chi));
    }
  }
  if (degsq != target)
    throw std::runtime_error(
        "irreducible character search did not exhaust the group; it may not be monomial");
  std::sort(found.begin(), found.end(), [](const Character& a, const Character& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (size_t i = 0; i < a.values.size(); ++i) {
      unsigned ma = a.values[i].minimal_field_order(), mb = b.values[i].minimal_field_order();
      if (ma != mb) return ma < mb;
      int c = compare_cyclotomic(a.values[i], b.values[i]);
      if (c != 0) return c > 0;  // larger coordinates first: trivial row leads
    }
    return false;
  });
  name_rows(found);
  return found;
}

const Character& CharacterTable::row(unsigned i) const {
  if (i == 0 || i > rows.size()) throw std::out_of_range("character row index is 1-based");
  return rows[i - 1];
}

int CharacterTable::index_of(const std::string& name) const {
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].name == name) return static_cast<int>(i);
  return -1;
}

void certify_table(const CharacterTable& T) {
  const unsigned r = static_cast<unsigned>(T.rows.size());
  const unsigned nc = T.classes->count();
  if (r == 0 || r != nc)
    throw std::logic_error("character table must be square against the class partition");
  BigInt degsq = 0;
  for (const Character& chi : T.rows) degsq += BigInt(chi.degree()) * chi.degree();
  if (degsq != BigInt(T.group->n))
    throw std::logic_error("squared character degrees do not sum to the group order");
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = i; j < r; ++j) {
      Rational ip = inner_product(T.rows[i], T.rows[j]);
      if (ip != Rational(i == j ? 1 : 0))
        throw std::logic_error("character table rows are not orthonormal");
    }
  for (unsigned c = 0; c < nc; ++c)
    for (unsigned c2 = c; c2 < nc; ++c2) {
      Cyclotomic sum(0);
      for (const Character& chi : T.rows) sum += chi.values[c] * chi.values[c2].conjugate();
      Rational expect = c == c2 ? Rational(static_cast<long long>(T.group->n),
                                           static_cast<long long>(T.classes->classes[c].size()))
                                : Rational(0);
      if (!(sum == Cyclotomic(expect)))
        throw std::logic_error("character table columns are not orthogonal");
    }
  for (const Character& chi : T.rows) {
    if (chi.name.empty()) throw std::logic_error("character rows must be named");
    if (!chi.witness) throw std::logic_error("character rows must carry a monomial witness");
    Character again = induce(T.group, T.classes, chi.witness->subgroup, chi.witness->phi);
    if (!again.same_values(chi))
      throw std::logic_error("monomial witness does not induce its character row");
  }
}

CharacterTable monomial_table(GroupPtr G) {
  CharacterTable T;
  T.group = G;
  T.rows = irreducible_characters_monomial(G);
  T.classes = T.rows.at(0).classes;
  certify_table(T);
  return T;
}

CharacterTable cyclic_table(unsigned n, const std::string& label) {
  CharacterTable T;
  T.group = make_group(cyclic(n, label));
  T.classes = make_classes(T.group);
  for (const std::vector<Cyclotomic>& hv : degree_one_value_vectors(*T.group))
    T.rows.push_back(make_degree_one_row(T.group, T.classes, hv));
  name_rows(T.rows);
  certify_table(T);
  return T;
}

namespace {

// Shared scaffolding for the dihedral/quaternion families: both store
// elements as x^a y^b with b*M + a, have the same four degree-1 characters
// when M is even, and take their degree-2 characters by inducing from <x>.
void add_sign_characters(CharacterTable& T, unsigned M, bool four) {
  unsigned n = T.group->n;
  auto add = [&](int sx, int sy) {
    std::vector<Cyclotomic> val(n);
    for (unsigned a = 0; a < M; ++a)
      for (unsigned b = 0; b < 2; ++b) {
        long long s = 1;
        if (sx < 0 && (a & 1)) s = -s;
        if (sy < 0 && b) s = -s;
        val[b * M + a] = Cyclotomic(s);
      }
    T.rows.push_back(make_degree_one_row(T.group, T.classes, val));
  };
  add(1, 1);
  add(1, -1);
  if (four) {
    add(-1, 1);
    add(-1, -1);
  }
}

Subgroup rotation_subgroup(unsigned M) {
  Subgroup H;
  H.members.resize(M);
  std::iota(H.members.begin(), H.members.end(), 0);
  return H;
}

void add_induced_from_rotation(CharacterTable& T, unsigned M, const Cyclotomic& w) {
  std::vector<Cyclotomic> phi(M);
  phi[0] = Cyclotomic(1);
  for (unsigned a = 1; a < M; ++a) phi[a] = phi[a - 1] * w;
  T.rows.push_back(induce(T.group, T.classes, rotation_subgroup(M), phi));
}

}  // namespace

CharacterTable dihedral_table(unsigned N, const std::array<std::string, 2>& labels) {
  CharacterTable T;
  T.group = make_group(dihedral(N, labels));
  T.classes = make_classes(T.group);
  unsigned M = N / 2;
  add_sign_characters(T, M, M % 2 == 0);
  unsigned kmax = M % 2 == 0 ? M / 2 - 1 : (M - 1) / 2;
  for (unsigned k = 1; k <= kmax; ++k)
    add_induced_from_rotation(T, M, Cyclotomic::zeta(M, k));
  name_rows(T.rows);
  certify_table(T);
  return T;
}

CharacterTable d4p_table(unsigned p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("dihedral CM family requires an odd prime parameter");
  CharacterTable T;
  T.group = make_group(dihedral(4 * p));
  T.classes = make_classes(T.group);
  unsigned M = 2 * p;
  add_sign_characters(T, M, true);
  // Odd degree-2 rows chi_{4+m}: induced from phi^m on <x> with
  // phi^m(x^2) = zeta_p^m and phi^m(x^p) = -1, i.e. phi^m(x) = -zeta_p^(m(p+1)/2).
  for (unsigned m = 1; m <= (p - 1) / 2; ++m) {
    unsigned e = static_cast<unsigned>((static_cast<unsigned long long>(m) * ((p + 1) / 2)) % p);
    add_induced_from_rotation(T, M, Cyclotomic(-1) * Cyclotomic::zeta(p, e));
  }
  // Even degree-2 rows: phi(x^2) = zeta_p^m, phi(x^p) = 1.
  for (unsigned m = 1; m <= (p - 1) / 2; ++m) {
    unsigned e = static_cast<unsigned>((static_cast<unsigned long long>(m) * ((p + 1) / 2)) % p);
    add_induced_from_rotation(T, M, Cyclotomic::zeta(p, e));
  }
  name_rows(T.rows);
  certify_table(T);
  return T;
}

CharacterTable quaternion_table(unsigned n) {
  CharacterTable T;
  T.group = make_group(generalized_quaternion(n));
  T.classes = make_classes(T.group);
  unsigned M = 1u << (n + 1);
  add_sign_characters(T, M, true);
  for (unsigned c = 2; c + 2 <= M / 2; c += 2)
    add_induced_from_rotation(T, M, Cyclotomic::zeta(M, c));
  for (unsigned c = 1; c < M / 2; c += 2)
    add_induced_from_rotation(T, M, Cyclotomic::zeta(M, c));
  name_rows(T.rows);
  certify_table(T);
  return T;
}

CharacterTable z2a4_table() {
  GroupPtr A4 = make_group(alternating4());
  // Per-element value vectors of the four A4 irreducibles: the three
  // degree-1 characters through the abelianization (trivial, omega with
  // omega(y) = zeta_3, and omega^2), then the degree-3 character induced
  // from a nontrivial character of the Klein subgroup.
  std::vector<std::vector<Cyclotomic>> a4vals = degree_one_value_vectors(*A4);
  if (a4vals.size() != 3) throw std::logic_error("A4 must have three degree-1 characters");
  Subgroup V = commutator_subgroup(*A4);
  if (V.order() != 4) throw std::logic_error("A4 commutator subgroup must be the Klein subgroup");
  SubgroupAsGroup VG = subgroup_as_group(*A4, V);
  std::vector<std::vector<Cyclotomic>> vhoms = degree_one_value_vectors(VG.H);
  const std::vector<Cyclotomic>& lambda = vhoms.at(1);  // first nontrivial
  ClassesPtr a4cls = make_classes(A4);
  Character std3 = induce(A4, a4cls, V, lambda);
  std::vector<Cyclotomic> stdelem(A4->n);
  for (unsigned g = 0; g < A4->n; ++g) stdelem[g] = std3.value_on(g);
  a4vals.push_back(std::move(stdelem));

  CharacterTable T;
  T.group = make_group(z2_times_a4());
  T.classes = make_classes(T.group);
  const unsigned nB = T.group->factor_b_size;
  Subgroup z2v;  // Z/2 x V inside the product
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned v : V.members) z2v.members.push_back(a * nB + v);
  std::sort(z2v.members.begin(), z2v.members.end());

  for (unsigned r = 0; r < 4; ++r)
    for (unsigned s = 0; s < 2; ++s) {
      std::vector<Cyclotomic> val;
      for (unsigned rep : T.classes->reps) {
        unsigned a = rep / nB, b = rep % nB;
        Cyclotomic v = a4vals[r][b];
        if (s == 1 && a == 1) v = -v;
        val.push_back(v);
      }
      Character chi;
      if (r < 3) {
        std::vector<Cyclotomic> per_element(T.group->n);
        for (unsigned g = 0; g < T.group->n; ++g) {
          Cyclotomic v = a4vals[r][g % nB];
          if (s == 1 && g / nB == 1) v = -v;
          per_element[g] = v;
        }
        chi = make_degree_one_row(T.group, T.classes, per_element);
      } else {
        std::vector<Cyclotomic> phi;
        for (unsigned m : z2v.members) {
          Cyclotomic v = lambda[VG.from_parent[m % nB]];
          if (s == 1 && m / nB == 1) v = -v;
          phi.push_back(v);
        }
        chi = induce(T.group, T.classes, z2v, phi);
      }
      if (!std::equal(val.begin(), val.end(), chi.values.begin(),
                      [](const Cyclotomic& x, const Cyclotomic& y) { return x == y; }))
        throw std::logic_error("tensor values disagree with the constructed character");
      T.rows.push_back(std::move(chi));
    }
  name_rows(T.rows);
  certify_table(T);
  return T;
}

CharacterTable product_table(const CharacterTable& TA, const CharacterTable& TB,
                             const std::string& name) {
  CharacterTable T;
  T.group = make_group(direct_product(*TA.group, *TB.group, name));
  T.classes = make_classes(T.group);
  const unsigned nB = TB.group->n;
  for (const Character& cb : TB.rows)
    for (const Character& ca : TA.rows) {
      if (ca.degree() != 1)
        throw std::invalid_argument(
            "product tables require all first-factor characters to have degree 1");
      Character chi;
      chi.group = T.group;
      chi.classes = T.classes;
      for (unsigned rep : T.classes->reps)
        chi.values.push_back(ca.value_on(rep / nB) * cb.value_on(rep % nB));
      if (!cb.witness) throw std::invalid_argument("second-factor rows must carry witnesses");
      MonomialWitness w;
      std::vector<long> posB(nB, -1);
      for (size_t i = 0; i < cb.witness->subgroup.members.size(); ++i)
        posB[cb.witness->subgroup.members[i]] = static_cast<long>(i);
      for (unsigned a = 0; a < TA.group->n; ++a)
        for (unsigned h : cb.witness->subgroup.members) {
          w.subgroup.members.push_back(a * nB + h);
          w.phi.push_back(ca.value_on(a) * cb.witness->phi[posB[h]]);
        }
      // a-major enumeration is already ascending in the product index
      chi.witness = std::move(w);
      T.rows.push_back(std::move(chi));
    }
  name_rows(T.rows);
  certify_table(T);
  return T;
}

std::string format_table_text(const CharacterTable& T) {
  const unsigned r = static_cast<unsigned>(T.rows.size());
  const unsigned nc = T.classes->count();
  std::vector<std::vector<std::string>> cells(r + 1, std::vector<std::string>(nc + 1));
  cells[0][0] = "";
  for (unsigned c = 0; c < nc; ++c)
    cells[0][c + 1] = "{" + T.group->labels[T.classes->reps[c]] + "}";
  for (unsigned i = 0; i < r; ++i) {
    cells[i + 1][0] = T.rows[i].name;
    for (unsigned c = 0; c < nc; ++c) cells[i + 1][c + 1] = T.rows[i].values[c].str();
  }
  auto display_width = [](const std::string& s) {
    size_t w = 0;
    for (unsigned char ch : s)
      if ((ch & 0xC0) != 0x80) ++w;  // skip UTF-8 continuation bytes
    return w;
  };
  std::vector<size_t> width(nc + 1, 0);
  for (auto& row : cells)
    for (unsigned c = 0; c <= nc; ++c) width[c] = std::max(width[c], display_width(row[c]));
  std::ostringstream os;
  for (auto& row : cells) {
    for (unsigned c = 0; c <= nc; ++c) {
      os << row[c] << std::string(width[c] - display_width(row[c]), ' ');
      os << (c == nc ? "" : "  ");
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace bsf
