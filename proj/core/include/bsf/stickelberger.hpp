#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bsf/groupring.hpp"

namespace bsf {

// How the Euler factor treats the residue norm: the `limit` variant evaluates
// det(1 - rho(phi_P) P_I) (the s -> 0 limit, where Np^{-s} -> 1); `literal_np`
// keeps the norm at face value, det(1 - Np rho(phi_P) P_I).
enum class EpsVariant { limit, literal_np };

// One finite place of the base field: its residue norm, the decomposition and
// inertia subgroups at a fixed place above it, and a chosen Frobenius lift.
struct PlaceData {
  std::string label;
  BigInt norm = 0;
  Subgroup decomposition;
  Subgroup inertia;
  unsigned frobenius_lift = 0;
};

// Structural checks: both subgroups closed, inertia normal in decomposition,
// lift contained in the decomposition group with its coset generating the
// cyclic quotient, norm >= 2. Throws std::invalid_argument.
void validate_place(const FiniteGroup& G, const PlaceData& place, bool require_unramified);

// Data for one abelian subextension: a subgroup H, a degree-1 character of H
// pinned by its values on generators, and the abelian Stickelberger element
// of H/ker(phi) written as (word, coefficient) pairs with words evaluated in
// H and pushed through the quotient projection.
struct AbelianThetaBlock {
  std::string chi_name;
  std::vector<std::string> subgroup_generators;
  std::vector<std::pair<std::string, Cyclotomic>> phi_on_generators;
  std::vector<std::pair<std::string, Cyclotomic>> theta_terms;
};

// External arithmetic data: everything the assembly formulas consume.
// L-values and abelian theta elements are inputs, never computed here.
struct ArithmeticInput {
  GroupPtr group;
  unsigned j = 0;  // central involution acting as complex conjugation
  std::vector<PlaceData> s_places;  // finite part of S (the tag covers the rest)
  std::vector<PlaceData> t_places;  // T, unramified and disjoint from S
  unsigned long long mu_order = 1;
  bool torsion_free = false;  // unit-group torsion hypothesis, asserted by the data
  bool omit_trivial = true;   // even/trivial L-value entries are rejected when set
  std::string l_value_tag = "S_inf";  // which S the supplied L-values are imprimitive at
  std::vector<std::pair<std::string, Cyclotomic>> l_values;  // row name -> L(0, chi-bar)
  std::vector<AbelianThetaBlock> abelian_blocks;
};

// Structural validation against a certified table (names resolve, places well
// formed, S and T disjoint, T unramified, j is the central involution).
// Throws std::invalid_argument.
void validate_input(const ArithmeticInput& in, const CharacterTable& T);

// Euler factor of one place: det over the chi-module of 1 minus the Frobenius
// lift composed with the inertia averaging projector P_I. Exact; independent
// of the lift choice within its inertia coset.
Cyclotomic euler_factor_eps(const Character& chi, const PlaceData& place, const MonomialRep& rep,
                            EpsVariant variant = EpsVariant::limit);

// Product over the T-places of det(1 - Np rho(phi_P^{-1})).
Cyclotomic delta_T(const Character& chi, const std::vector<PlaceData>& t_places,
                   const MonomialRep& rep);

// Central element whose component at every row is delta_T of that row; the
// annihilator-ideal generator attached to T.
CentralElement a_s_generator(const CharacterTable& T, const std::vector<PlaceData>& t_places);

// A fully resolved abelian block: the subgroup as a standalone group, the
// matched degree-1 character, the quotient by its kernel, the theta element
// over the quotient, and the scalar phi'(theta).
struct AbelianBlockData {
  std::string chi_name;
  Subgroup h;                        // inside the parent group
  GroupPtr h_group;                  // H standalone
  std::vector<unsigned> to_parent;   // h_group -> parent indices
  std::vector<Cyclotomic> phi;       // degree-1 values on h_group elements
  Subgroup kernel;                   // ker(phi) inside h_group
  GroupPtr q_group;                  // H / ker(phi)
  std::vector<unsigned> projection;  // h_group -> q_group
  std::vector<unsigned> section;     // q_group -> smallest h_group representative
  std::vector<Cyclotomic> phi_prime; // descended values on q_group elements
  GroupRingElement theta;            // over q_group
  Cyclotomic phi_theta;              // phi'(theta)
};

// Resolves and cross-checks one block: the generators close to H, exactly one
// degree-1 character matches the pinned values, and inducing it reproduces
// the named table row. Throws std::domain_error("witness/quotient mismatch:
// ...") on any inconsistency.
AbelianBlockData resolve_abelian_block(const AbelianThetaBlock& block, const CharacterTable& T);

// Assembled (S,T)-modified element with provenance.
struct StickelbergerElement {
  CentralElement value;
  std::string s_description;
  std::string t_description;
  std::string mode;  // "L-values" or "reduction"
};

// Component at chi = delta_T(chi) * [product of Euler factors at the
// conjugate row, when apply_euler_factors] * L(0, conjugate row). Components
// at even rows are exactly 0. The conjugate-row placement makes the result
// the definitional theta: Galois-equivariant and independent of which orbit
// representatives carry the input values.
StickelbergerElement assemble_theta_from_L(const ArithmeticInput& in, const CharacterTable& T,
                                           bool apply_euler_factors,
                                           EpsVariant variant = EpsVariant::limit);

// Same element assembled from abelian data: component at chi_i is
// delta_T(chi_i) * [Euler factors at the conjugate row] * phi'_i(theta_i),
// since phi'(theta) already carries the contragredient L-value. Agrees with
// assemble_theta_from_L whenever the inputs describe the same extension.
StickelbergerElement assemble_theta_reduction(const ArithmeticInput& in, const CharacterTable& T,
                                              bool apply_euler_factors,
                                              EpsVariant variant = EpsVariant::limit);

struct IntegralityReport {
  std::vector<std::pair<std::string, bool>> per_character;  // component integral?
  bool in_center_of_maximal_order = false;  // all components are algebraic integers
  bool coefficients_integral = false;       // group-ring coefficients in Z
  bool coefficients_2_integral = false;     // group-ring coefficients in Z[1/2]
  std::string str() const;
};

IntegralityReport integrality_check(const StickelbergerElement& theta);

}  // namespace bsf
