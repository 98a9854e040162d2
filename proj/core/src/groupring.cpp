#include "bsf/groupring.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "bsf/parallel.hpp"

namespace bsf {

namespace {

void require_same_group(const GroupRingElement& a, const GroupRingElement& b,
                        const char* what) {
  if (a.group.get() != b.group.get())
    throw std::invalid_argument(std::string(what) + ": operands live over different groups");
}

void require_table_alignment(const CharacterTable& T, const CentralElement& x,
                             const char* what) {
  if (x.group.get() != T.group.get())
    throw std::invalid_argument(std::string(what) + ": element and table disagree on the group");
  if (x.components.size() != T.rows.size() || x.row_names.size() != T.rows.size())
    throw std::invalid_argument(std::string(what) + ": component vector does not match the table");
  for (std::size_t i = 0; i < T.rows.size(); ++i)
    if (x.row_names[i] != T.rows[i].name)
      throw std::invalid_argument(std::string(what) + ": component names do not match the table");
}

std::vector<Cyclotomic> raw_components(const CharacterTable& T, const GroupRingElement& x) {
  std::vector<Cyclotomic> comps(T.rows.size());
  parallel_for(T.rows.size(), [&](std::size_t i) {
    const Character& chi = T.rows[i];
    comps[i] = character_sum(chi, x) * Cyclotomic(Rational(1, chi.degree()));
  });
  return comps;
}

GroupRingElement element_of_components(const CharacterTable& T,
                                       const std::vector<Cyclotomic>& comps) {
  GroupRingElement r(T.group);
  for (std::size_t i = 0; i < T.rows.size(); ++i) {
    if (comps[i].is_zero()) continue;
    r += e_chi_element(T.rows[i]) * comps[i];
  }
  return r;
}

// Locates the table row with the given value vector; -1 when absent.
int row_with_values(const CharacterTable& T, const std::vector<Cyclotomic>& values) {
  for (std::size_t k = 0; k < T.rows.size(); ++k) {
    if (T.rows[k].values.size() != values.size()) continue;
    bool same = true;
    for (std::size_t c = 0; c < values.size() && same; ++c)
      same = T.rows[k].values[c] == values[c];
    if (same) return static_cast<int>(k);
  }
  return -1;
}

bool is_prime_u64(unsigned long long p) {
  if (p < 2) return false;
  for (unsigned long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// True when the coefficient's printed form has more than one additive term,
// and so needs parentheses inside a product.
bool needs_parens(const std::string& s) { return s.find(' ') != std::string::npos; }

std::string format_term(const Cyclotomic& c, const std::string& label) {
  std::string s = c.str();
  if (label == "1") return needs_parens(s) ? "(" + s + ")" : s;
  if (s == "1") return label;
  if (s == "-1") return "-" + label;
  if (needs_parens(s)) return "(" + s + ")*" + label;
  return s + "*" + label;
}

}  // namespace

GroupRingElement::GroupRingElement(GroupPtr G) : group(std::move(G)) {
  if (!group) throw std::invalid_argument("group ring element: null group");
  coeffs.assign(group->n, Cyclotomic());
}

GroupRingElement GroupRingElement::one(GroupPtr G) { return basis(std::move(G), 0); }

GroupRingElement GroupRingElement::basis(GroupPtr G, unsigned g) {
  GroupRingElement r(std::move(G));
  if (g >= r.group->n) throw std::out_of_range("group ring basis: element index out of range");
  r.coeffs[g] = Cyclotomic(1);
  return r;
}

GroupRingElement GroupRingElement::from_terms(
    GroupPtr G, const std::vector<std::pair<std::string, Rational>>& terms) {
  GroupRingElement r(std::move(G));
  for (const auto& [word, c] : terms) r.coeffs[r.group->evaluate_word(word)] += Cyclotomic(c);
  return r;
}

GroupRingElement GroupRingElement::from_cyclotomic_terms(
    GroupPtr G, const std::vector<std::pair<std::string, Cyclotomic>>& terms) {
  GroupRingElement r(std::move(G));
  for (const auto& [word, c] : terms) r.coeffs[r.group->evaluate_word(word)] += c;
  return r;
}

unsigned GroupRingElement::coeff_order() const {
  unsigned m = 1;
  for (const auto& c : coeffs) m = std::lcm(m, c.order());
  return m;
}

bool GroupRingElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

bool GroupRingElement::is_rational() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Cyclotomic& c) { return c.is_rational(); });
}

bool GroupRingElement::is_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Cyclotomic& c) { return c.is_integral(); });
}

bool GroupRingElement::is_central() const {
  // Invariance of the coefficient function under conjugation by a generating
  // set is equivalent to commuting with everything.
  const FiniteGroup& G = *group;
  for (unsigned s : greedy_generators(G)) {
    const unsigned si = G.inverse(s);
    for (unsigned g = 0; g < G.n; ++g) {
      const unsigned conj = G.mul(s, G.mul(g, si));
      if (conj != g && !(coeffs[conj] == coeffs[g])) return false;
    }
  }
  return true;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  require_same_group(*this, o, "group ring sum");
  for (unsigned g = 0; g < group->n; ++g) coeffs[g] += o.coeffs[g];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  require_same_group(*this, o, "group ring difference");
  for (unsigned g = 0; g < group->n; ++g) coeffs[g] -= o.coeffs[g];
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

GroupRingElement& GroupRingElement::operator*=(const Cyclotomic& s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Rational& s) {
  return *this *= Cyclotomic(s);
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_group(a, b, "group ring product");
  const FiniteGroup& G = *a.group;
  GroupRingElement r(a.group);
  for (unsigned g = 0; g < G.n; ++g) {
    if (a.coeffs[g].is_zero()) continue;
    for (unsigned h = 0; h < G.n; ++h) {
      if (b.coeffs[h].is_zero()) continue;
      r.coeffs[G.mul(g, h)] += a.coeffs[g] * b.coeffs[h];
    }
  }
  return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  if (group.get() != o.group.get()) return false;
  for (unsigned g = 0; g < group->n; ++g)
    if (!(coeffs[g] == o.coeffs[g])) return false;
  return true;
}

std::string GroupRingElement::str() const {
  std::string out;
  for (unsigned g = 0; g < group->n; ++g) {
    if (coeffs[g].is_zero()) continue;
    std::string term = format_term(coeffs[g], group->labels[g]);
    if (out.empty()) {
      out = std::move(term);
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string CentralElement::components_str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ", ";
    out += row_names[i] + ": " + components[i].str();
  }
  return out + "]";
}

std::string CentralElement::str() const { return components_str() + " = " + element.str(); }

GroupRingElement e_chi_element(const Character& chi) {
  const FiniteGroup& G = *chi.group;
  GroupRingElement r(chi.group);
  const Cyclotomic scale{Rational(chi.degree(), G.n)};
  for (unsigned g = 0; g < G.n; ++g) r.coeffs[g] = scale * chi.value_on(G.inverse(g));
  return r;
}

GroupRingElement pr_chi(const Character& chi) {
  GroupRingElement r = e_chi_element(chi);
  return r *= Rational(static_cast<long long>(chi.group->n), chi.degree());
}

CentralElement e_chi(const CharacterTable& T, unsigned i) {
  return to_components(T, e_chi_element(T.row(i)));
}

GroupRingElement pr_linear(GroupPtr H, const std::vector<Cyclotomic>& phi) {
  if (phi.size() != H->n) throw std::invalid_argument("pr_linear: value vector size mismatch");
  GroupRingElement r(H);
  for (unsigned h = 0; h < r.group->n; ++h) r.coeffs[h] = phi[r.group->inverse(h)];
  return r;
}

Cyclotomic character_sum(const Character& chi, const GroupRingElement& x) {
  if (chi.group.get() != x.group.get())
    throw std::invalid_argument("character_sum: character and element live over different groups");
  Cyclotomic acc;
  for (unsigned g = 0; g < x.group->n; ++g) {
    if (x.coeffs[g].is_zero()) continue;
    acc += x.coeffs[g] * chi.value_on(g);
  }
  return acc;
}

CentralElement to_components(const CharacterTable& T, const GroupRingElement& x) {
  if (x.group.get() != T.group.get())
    throw std::invalid_argument("to_components: element and table disagree on the group");
  if (!x.is_central()) throw std::domain_error("to_components: element is not central");
  CentralElement r;
  r.group = T.group;
  for (const Character& chi : T.rows) r.row_names.push_back(chi.name);
  r.components = raw_components(T, x);
  r.element = x;
  if (!(element_of_components(T, r.components) == x))
    throw std::logic_error(
        "to_components: central element does not reconstruct from its components "
        "(incomplete table?)");
  return r;
}

CentralElement from_components(const CharacterTable& T, std::vector<Cyclotomic> components) {
  if (components.size() != T.rows.size())
    throw std::invalid_argument("from_components: one component per table row required");
  CentralElement r;
  r.group = T.group;
  for (const Character& chi : T.rows) r.row_names.push_back(chi.name);
  r.element = element_of_components(T, components);
  r.components = std::move(components);
  const std::vector<Cyclotomic> check = raw_components(T, r.element);
  for (std::size_t i = 0; i < check.size(); ++i)
    if (!(check[i] == r.components[i]))
      throw std::logic_error("from_components: component round trip failed");
  return r;
}

MonomialRep monomial_representation(const Character& chi) {
  if (!chi.witness) throw std::invalid_argument("monomial_representation: character has no witness");
  const FiniteGroup& G = *chi.group;
  const Subgroup& H = chi.witness->subgroup;
  const std::vector<Cyclotomic>& phi = chi.witness->phi;

  std::vector<unsigned> pos_in_h(G.n, UINT_MAX);
  for (std::size_t i = 0; i < H.members.size(); ++i) pos_in_h[H.members[i]] = static_cast<unsigned>(i);

  MonomialRep rep;
  rep.group = chi.group;
  std::vector<unsigned> coset_of(G.n, UINT_MAX);
  for (unsigned g = 0; g < G.n; ++g) {
    if (coset_of[g] != UINT_MAX) continue;
    const unsigned idx = static_cast<unsigned>(rep.transversal.size());
    rep.transversal.push_back(g);
    for (unsigned h : H.members) coset_of[G.mul(g, h)] = idx;
  }
  rep.dim = static_cast<unsigned>(rep.transversal.size());
  if (rep.dim != chi.degree())
    throw std::logic_error("monomial_representation: index of the witness subgroup != degree");

  rep.matrices.resize(G.n);
  for (unsigned g = 0; g < G.n; ++g) {
    Matrix<Cyclotomic> m(rep.dim, rep.dim);
    Cyclotomic trace;
    for (unsigned j = 0; j < rep.dim; ++j) {
      const unsigned gt = G.mul(g, rep.transversal[j]);
      const unsigned i = coset_of[gt];
      const unsigned h = G.mul(G.inverse(rep.transversal[i]), gt);
      m.at(i, j) = phi[pos_in_h[h]];
      if (i == j) trace += m.at(i, j);
    }
    if (!(trace == chi.value_on(g)))
      throw std::logic_error("monomial_representation: trace does not match the character");
    rep.matrices[g] = std::move(m);
  }
  return rep;
}

Matrix<Cyclotomic> MonomialRep::evaluate(const GroupRingElement& x) const {
  if (x.group.get() != group.get())
    throw std::invalid_argument("monomial evaluate: element lives over a different group");
  Matrix<Cyclotomic> acc(dim, dim);
  for (unsigned g = 0; g < group->n; ++g) {
    if (x.coeffs[g].is_zero()) continue;
    acc = acc + matrices[g].scaled(x.coeffs[g]);
  }
  return acc;
}

CentralElement reduced_norm(const CharacterTable& T, const GroupRingElement& alpha) {
  Matrix<GroupRingElement> M(1, 1);
  M.at(0, 0) = alpha;
  return reduced_norm_matrix(T, M);
}

CentralElement reduced_norm_matrix(const CharacterTable& T, const Matrix<GroupRingElement>& M) {
  if (M.rows != M.cols) throw std::invalid_argument("reduced norm: non-square matrix");
  for (const auto& entry : M.a)
    if (entry.group.get() != T.group.get())
      throw std::invalid_argument("reduced norm: matrix entries live over a different group");
  const std::size_t n = M.rows;
  std::vector<Cyclotomic> comps(T.rows.size());
  parallel_for(T.rows.size(), [&](std::size_t r) {
    const Character& chi = T.rows[r];
    const unsigned d = chi.degree();
    Matrix<Cyclotomic> block(n * d, n * d);
    if (d == 1) {
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) block.at(u, v) = character_sum(chi, M.at(u, v));
    } else {
      const MonomialRep rep = monomial_representation(chi);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          const Matrix<Cyclotomic> cell = rep.evaluate(M.at(u, v));
          for (unsigned a = 0; a < d; ++a)
            for (unsigned b = 0; b < d; ++b) block.at(u * d + a, v * d + b) = cell.at(a, b);
        }
    }
    comps[r] = determinant(std::move(block));
  });
  return from_components(T, std::move(comps));
}

bool conductor_member(const CharacterTable& T, const CentralElement& x) {
  require_table_alignment(T, x, "conductor_member");
  const unsigned order_g = T.group->n;
  for (std::size_t i = 0; i < T.rows.size(); ++i) {
    const Character& chi = T.rows[i];
    const CyclotomicSubfield K = character_field(chi);
    const Cyclotomic& comp = x.components[i];
    if (!K.contains(comp)) return false;  // outside the rational center
    const Cyclotomic comp_k = comp.in_field(K.conductor);
    // Galois equivariance: the component at chi^sigma must be sigma of the
    // component at chi, for every automorphism of the value field.
    for (unsigned a = 1; a < K.conductor; ++a) {
      if (std::gcd(a, K.conductor) != 1) continue;
      const GaloisAutomorphism sigma(a, K.conductor);
      std::vector<Cyclotomic> conj_values;
      conj_values.reserve(chi.values.size());
      for (const Cyclotomic& v : chi.values) conj_values.push_back(v.in_field(K.conductor).apply(sigma));
      const int k = row_with_values(T, conj_values);
      if (k < 0) throw std::logic_error("conductor_member: table not closed under Galois action");
      if (!(x.components[static_cast<std::size_t>(k)] == comp_k.apply(sigma))) return false;
    }
    // Componentwise central-conductor criterion: the scaled component must
    // pair integrally with the integers of the value field.
    const Cyclotomic scaled = comp_k * Cyclotomic(Rational(chi.degree(), order_g));
    if (!in_subfield_inverse_different(scaled, K)) return false;
  }
  return true;
}

GroupRingElement embed_into_parent(const GroupRingElement& x,
                                   const std::vector<unsigned>& to_parent, GroupPtr parent) {
  if (to_parent.size() != x.group->n)
    throw std::invalid_argument("embed_into_parent: index map size mismatch");
  GroupRingElement r(std::move(parent));
  for (unsigned h = 0; h < x.group->n; ++h) {
    if (to_parent[h] >= r.group->n) throw std::out_of_range("embed_into_parent: index out of range");
    r.coeffs[to_parent[h]] += x.coeffs[h];
  }
  return r;
}

PushdownResult conductor_pushdown(const CharacterTable& T, const CentralElement& x,
                                  const Subgroup& H) {
  require_table_alignment(T, x, "conductor_pushdown");
  const FiniteGroup& G = *T.group;

  SubgroupAsGroup sub = subgroup_as_group(G, H);
  PushdownResult out;
  out.to_parent = sub.to_parent;
  out.h_group = make_group(std::move(sub.H));
  out.element = GroupRingElement(out.h_group);

  // Support must sit inside a single Galois orbit of rows.
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < x.components.size(); ++i)
    if (!x.components[i].is_zero()) support.push_back(i);
  if (support.empty()) return out;

  std::vector<std::size_t> orbit_rows;
  for (const Character& conj : galois_orbit(T.rows[support.front()])) {
    const int k = row_with_values(T, conj.values);
    if (k < 0) throw std::logic_error("conductor_pushdown: table not closed under Galois action");
    orbit_rows.push_back(static_cast<std::size_t>(k));
  }
  for (std::size_t i : support)
    if (std::find(orbit_rows.begin(), orbit_rows.end(), i) == orbit_rows.end())
      throw std::domain_error("conductor_pushdown: components supported on more than one Galois orbit");

  // Each orbit row must be induced from H; collect its full fiber of
  // degree-1 characters.
  const std::vector<std::vector<Cyclotomic>> homs = degree_one_value_vectors(*out.h_group);
  for (std::size_t r : orbit_rows) {
    const Character& chi = T.rows[r];
    const Cyclotomic alpha = x.components[r] * Cyclotomic(Rational(chi.degree(), G.n));
    bool induced = false;
    for (const auto& hom : homs) {
      const Character ind = induce(T.group, T.classes, H, hom);
      if (!ind.same_values(chi)) continue;
      induced = true;
      if (!alpha.is_zero()) out.element += pr_linear(out.h_group, hom) * alpha;
    }
    if (!induced)
      throw std::domain_error("conductor_pushdown: row " + chi.name +
                              " is not induced from the given subgroup");
  }

  if (!(embed_into_parent(out.element, out.to_parent, T.group) == x.element))
    throw std::logic_error(
        "conductor_pushdown: the pushed-down element does not reproduce the input inside the "
        "parent group ring");
  return out;
}

CentralElement w_K(const CharacterTable& T, unsigned long long mu_order) {
  if (mu_order == 0) throw std::invalid_argument("w_K: the root-of-unity count must be positive");
  std::vector<Cyclotomic> comps;
  comps.reserve(T.rows.size());
  for (const Character& chi : T.rows) {
    BigInt v = 1;
    for (unsigned k = 0; k < chi.degree(); ++k) v *= BigInt(mu_order);
    comps.push_back(Cyclotomic(Rational(v)));
  }
  return from_components(T, std::move(comps));
}

CmFactorization cm_factorization(const FiniteGroup& G) {
  if (G.factor_a_size == 0 || G.factor_b_size == 0 ||
      G.factor_a_size * G.factor_b_size != G.n)
    throw std::domain_error("cm_factorization: group was not built as a direct product");
  const bool a2 = G.factor_a_size == 2;
  const bool b2 = G.factor_b_size == 2;
  if (a2 && b2)
    throw std::domain_error("cm_factorization: both factors have order 2 (ambiguous)");
  if (!a2 && !b2) throw std::domain_error("cm_factorization: no order-2 direct factor");

  CmFactorization out;
  if (a2) {
    out.j = G.factor_b_size;  // (a=1, b=0)
    for (unsigned b = 0; b < G.factor_b_size; ++b) out.h.members.push_back(b);
  } else {
    out.j = 1;  // (a=0, b=1)
    for (unsigned a = 0; a < G.factor_a_size; ++a) out.h.members.push_back(a * 2);
  }
  if (G.element_order(out.j) != 2 || !G.is_central(out.j))
    throw std::logic_error("cm_factorization: order-2 factor generator is not a central involution");
  return out;
}

namespace {

GroupRingElement part_iso(const GroupRingElement& alpha, int sign) {
  const FiniteGroup& G = *alpha.group;
  const CmFactorization fac = cm_factorization(G);
  SubgroupAsGroup sub = subgroup_as_group(G, fac.h);
  GroupRingElement r(make_group(std::move(sub.H)));
  for (unsigned h = 0; h < r.group->n; ++h) {
    const unsigned g = sub.to_parent[h];
    const Cyclotomic& twisted = alpha.coeffs[G.mul(fac.j, g)];
    r.coeffs[h] = sign > 0 ? alpha.coeffs[g] + twisted : alpha.coeffs[g] - twisted;
  }
  return r;
}

}  // namespace

GroupRingElement minus_part_iso(const GroupRingElement& alpha) { return part_iso(alpha, -1); }
GroupRingElement plus_part_iso(const GroupRingElement& alpha) { return part_iso(alpha, +1); }

std::vector<CentralElement> nr_ideal_sample(const CharacterTable& T, unsigned count,
                                            unsigned matrix_size_bound,
                                            long long coefficient_bound, std::uint64_t seed) {
  if (matrix_size_bound == 0) throw std::invalid_argument("nr_ideal_sample: size bound must be >= 1");
  if (coefficient_bound < 0)
    throw std::invalid_argument("nr_ideal_sample: coefficient bound must be >= 0");
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(coefficient_bound) + 1;
  std::vector<CentralElement> out;
  out.reserve(count);
  for (unsigned s = 0; s < count; ++s) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % matrix_size_bound);
    Matrix<GroupRingElement> M(n, n);
    for (auto& entry : M.a) {
      entry = GroupRingElement(T.group);
      for (auto& c : entry.coeffs)
        c = Cyclotomic(static_cast<long long>(rng() % span) - coefficient_bound);
    }
    out.push_back(reduced_norm_matrix(T, M));
  }
  return out;
}

std::string h_equals_f_report(const CharacterTable& T, unsigned long long p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("h_equals_f_report: p must be prime");
  for (const Character& chi : T.rows)
    if (chi.degree() % p == 0) return "unknown";
  return "H = F";
}

}  // namespace bsf
