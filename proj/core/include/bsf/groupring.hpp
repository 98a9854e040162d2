#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bsf/character.hpp"
#include "bsf/matrix.hpp"

namespace bsf {

// Element of Q(zeta)[G]: one cyclotomic coefficient per group element.
class GroupRingElement {
 public:
  GroupPtr group;
  std::vector<Cyclotomic> coeffs;

  GroupRingElement() = default;
  explicit GroupRingElement(GroupPtr G);  // zero element
  static GroupRingElement one(GroupPtr G);
  static GroupRingElement basis(GroupPtr G, unsigned g);
  // Builds sum of coeff * word, where each word is parsed by
  // FiniteGroup::evaluate_word ("1", "x", "x^-1*y", ...).
  static GroupRingElement from_terms(
      GroupPtr G, const std::vector<std::pair<std::string, Rational>>& terms);
  static GroupRingElement from_cyclotomic_terms(
      GroupPtr G, const std::vector<std::pair<std::string, Cyclotomic>>& terms);

  // Smallest canonical cyclotomic order containing every coefficient.
  unsigned coeff_order() const;
  bool is_zero() const;
  bool is_rational() const;  // every coefficient rational
  bool is_integral() const;  // every coefficient an algebraic integer
  bool is_central() const;   // commutes with all of Q[G]

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement operator-() const;
  GroupRingElement& operator*=(const Cyclotomic& s);
  GroupRingElement& operator*=(const Rational& s);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(GroupRingElement a, const Cyclotomic& s) { return a *= s; }
  friend GroupRingElement operator*(const Cyclotomic& s, GroupRingElement a) { return a *= s; }
  friend GroupRingElement operator*(GroupRingElement a, const Rational& s) { return a *= s; }
  friend GroupRingElement operator*(const Rational& s, GroupRingElement a) { return a *= s; }
  bool operator==(const GroupRingElement& o) const;

  // Group-ring form with generator labels, e.g. "67/4 - 29/4*x + x^2*y".
  std::string str() const;
};

// An element of the center of Q(zeta)[G], carried in both coordinate
// systems: one component per character-table row (the scalar by which the
// element acts on that row's module) and the equivalent group-ring form.
// Built only through to_components / from_components, which maintain the
// round-trip invariant.
struct CentralElement {
  GroupPtr group;
  std::vector<std::string> row_names;  // table order
  std::vector<Cyclotomic> components;  // aligned with row_names
  GroupRingElement element;

  std::string components_str() const;  // "[chi1: v1, chi2: v2, ...]"
  std::string str() const;             // both forms
};

// Central primitive idempotent attached to a table row, as a bare group-ring
// element: e = (deg/|G|) sum over g of chi(g^-1) g.
GroupRingElement e_chi_element(const Character& chi);
// pr = (|G|/deg) * e; for a degree-1 character of H this is sum phi(h^-1) h.
GroupRingElement pr_chi(const Character& chi);
// Same idempotent with its component vector relative to the full table
// (1 at the row, 0 elsewhere). i is 1-based, matching row names.
CentralElement e_chi(const CharacterTable& T, unsigned i);

// pr of a degree-1 character given by element-indexed values on a standalone
// group: sum phi(h^-1) h.
GroupRingElement pr_linear(GroupPtr H, const std::vector<Cyclotomic>& phi);

// Trace pairing sum over g of x_g chi(g); equals trace of the monomial
// representation applied to x.
Cyclotomic character_sum(const Character& chi, const GroupRingElement& x);

// Component decomposition of a central element: component at chi is
// (1/deg) * character_sum. Throws std::domain_error on non-central input and
// std::logic_error if reconstruction does not round-trip.
CentralElement to_components(const CharacterTable& T, const GroupRingElement& x);
CentralElement from_components(const CharacterTable& T, std::vector<Cyclotomic> components);

// Matrix model of an irreducible character through its monomial witness:
// coset-transversal monomial matrices, one per group element, satisfying
// rho(gh) = rho(g) rho(h) and trace rho(g) = chi(g) (checked at build time).
class MonomialRep {
 public:
  GroupPtr group;
  unsigned dim = 0;
  std::vector<unsigned> transversal;  // smallest representative per left coset
  std::vector<Matrix<Cyclotomic>> matrices;

  const Matrix<Cyclotomic>& rho(unsigned g) const { return matrices[g]; }
  // sum over g of x_g rho(g)
  Matrix<Cyclotomic> evaluate(const GroupRingElement& x) const;
};

MonomialRep monomial_representation(const Character& chi);

// Reduced norm: component at chi is det(rho_chi(alpha)); multiplicative, and
// the identity map component-wise for abelian groups.
CentralElement reduced_norm(const CharacterTable& T, const GroupRingElement& alpha);
// Reduced norm of a square matrix over the group ring: component at chi is
// the determinant of the (n*deg) x (n*deg) block matrix obtained by applying
// rho_chi entrywise.
CentralElement reduced_norm_matrix(const CharacterTable& T, const Matrix<GroupRingElement>& M);

// Membership test for the central conductor of Z[G] into a maximal order:
// true iff the component map is Galois-equivariant with each component in
// its row's value field, and (deg/|G|) * component lies in the inverse
// different of that field. Throws std::invalid_argument on a component
// vector that does not match the table.
bool conductor_member(const CharacterTable& T, const CentralElement& x);

// Push a conductor element supported on one Galois orbit of chi = Ind(phi),
// phi degree 1 on H, down to the group ring of H:
//   sum over sigma, and over all degree-1 phi of H inducing chi^sigma, of
//   alpha^sigma pr_phi,
// where alpha^sigma = (deg/|G|) * component at chi^sigma. The result, viewed
// back inside Q(zeta)[G], must equal x exactly (checked; std::logic_error
// otherwise). Throws std::domain_error if some orbit row is not induced
// from H.
struct PushdownResult {
  GroupPtr h_group;                 // H as a standalone group
  std::vector<unsigned> to_parent;  // H indices -> parent indices
  GroupRingElement element;         // over h_group
};
PushdownResult conductor_pushdown(const CharacterTable& T, const CentralElement& x,
                                  const Subgroup& H);

// Image of an element of Q(zeta)[H] inside Q(zeta)[G] along an index map.
GroupRingElement embed_into_parent(const GroupRingElement& x,
                                   const std::vector<unsigned>& to_parent, GroupPtr parent);

// Central element with component mu_order^deg(chi) at every row; the
// group-ring avatar of a root-of-unity count across the decomposition.
CentralElement w_K(const CharacterTable& T, unsigned long long mu_order);

// G presented as a direct product with exactly one Z/2 factor: the
// complementary factor as a subgroup, plus the index of the involution j
// generating the Z/2 factor. Throws std::domain_error when the product
// metadata is absent, when neither factor has order 2, or when both do.
struct CmFactorization {
  Subgroup h;
  unsigned j = 0;
};
CmFactorization cm_factorization(const FiniteGroup& G);

// Ring map Q(zeta)[H x <j>] -> Q(zeta)[H] sending j to -1 (resp. +1);
// restricted to the (1-j)/2 part (resp. (1+j)/2 part) it is an isomorphism
// onto its image. The returned element lives over the complementary factor
// as a standalone group, labels inherited from the parent.
GroupRingElement minus_part_iso(const GroupRingElement& alpha);
GroupRingElement plus_part_iso(const GroupRingElement& alpha);

// Reduced norms of pseudo-random integral matrices over Z[G]: `count`
// samples, matrix sizes in [1, matrix_size_bound], coefficients in
// [-coefficient_bound, coefficient_bound]. Deterministic under seed.
std::vector<CentralElement> nr_ideal_sample(const CharacterTable& T, unsigned count,
                                            unsigned matrix_size_bound,
                                            long long coefficient_bound, std::uint64_t seed);

// "H = F" when every irreducible degree is prime to p (the hypothesis under
// which the two central invariants are known to coincide), else "unknown".
// Throws std::invalid_argument unless p is prime.
std::string h_equals_f_report(const CharacterTable& T, unsigned long long p);

}  // namespace bsf
