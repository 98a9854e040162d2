#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bsf/cyclotomic.hpp"
#include "bsf/group.hpp"

namespace bsf {

using ClassesPtr = std::shared_ptr<const ConjClassPartition>;
ClassesPtr make_classes(const GroupPtr& G);

// Certificate that a character is monomial: a subgroup H and a degree-1
// character of H (one value per member, aligned with subgroup.members)
// inducing it.
struct MonomialWitness {
  Subgroup subgroup;
  std::vector<Cyclotomic> phi;
};

class Character {
 public:
  GroupPtr group;
  ClassesPtr classes;
  std::string name;
  std::vector<Cyclotomic> values;  // one per conjugacy class
  std::optional<MonomialWitness> witness;

  unsigned degree() const;
  const Cyclotomic& value_on_class(unsigned c) const { return values[c]; }
  Cyclotomic value_on(unsigned g) const { return values[classes->class_of[g]]; }
  bool same_values(const Character& other) const;
};

// Total order on cyclotomic numbers used for canonical row ordering:
// compares ambient order first, then coordinates lexicographically.
int compare_cyclotomic(const Cyclotomic& a, const Cyclotomic& b);

// Degree-1 characters of any finite group (homomorphisms to roots of unity),
// one value per group element, enumerated deterministically via the
// abelianization. Their number equals the order of the abelianization.
std::vector<std::vector<Cyclotomic>> degree_one_value_vectors(const FiniteGroup& H);

// chi(g) = (1/|H|) sum over all t in G of phi(t^-1 g t), zero outside H.
Character induce(GroupPtr G, ClassesPtr cls, const Subgroup& H,
                 const std::vector<Cyclotomic>& phi);
// Values of chi on the members of H, aligned with H.members.
std::vector<Cyclotomic> restrict_to_subgroup(const Character& chi, const Subgroup& H);
// Pullback through a quotient projection.
Character inflate(const Character& chiQ, const QuotientResult& q, GroupPtr G, ClassesPtr cls);

// (1/|G|) sum over g of a(g) * conj(b(g)); must come out rational.
Rational inner_product(const Character& a, const Character& b);
// Same, for element-indexed value vectors over a standalone group.
Rational inner_product_elementwise(const FiniteGroup& H, const std::vector<Cyclotomic>& a,
                                   const std::vector<Cyclotomic>& b);

Character conjugate_character(const Character& chi);
std::vector<Character> galois_orbit(const Character& chi);
// The field generated by the values: minimal cyclotomic conductor plus the
// stabilizer subgroup of (Z/fZ)^* fixing every value.
CyclotomicSubfield character_field(const Character& chi);
bool is_odd(const Character& chi);

// All irreducible characters, found by inducing degree-1 characters of
// subgroups (subgroups scanned smallest first, so each witness records the
// smallest inducing subgroup). Throws if the search does not reach
// sum of squared degrees = |G|. Rows sorted by (degree asc, values desc).
std::vector<Character> irreducible_characters_monomial(GroupPtr G);

struct CharacterTable {
  GroupPtr group;
  ClassesPtr classes;
  std::vector<Character> rows;
  // 1-based row access matching the chiN naming.
  const Character& row(unsigned i) const;
  int index_of(const std::string& name) const;  // -1 when absent
};

// Orthonormality of rows, column orthogonality, completeness and witness
// consistency (inducing every witness reproduces its row). Throws on failure.
void certify_table(const CharacterTable& T);

CharacterTable monomial_table(GroupPtr G);
CharacterTable cyclic_table(unsigned n, const std::string& label = "x");
CharacterTable dihedral_table(unsigned N, const std::array<std::string, 2>& labels = {"x", "y"});
// Dihedral group of order 4p, p an odd prime; rows: the four degree-1
// characters, then the (p-1)/2 odd degree-2 characters chi_{4+m} induced
// from phi^m on <x> (phi^m(x^2) = zeta_p^m, phi^m(x^p) = -1), then the
// (p-1)/2 even degree-2 characters.
CharacterTable d4p_table(unsigned p);
// Generalized quaternion group of order 2^(n+2); rows: four degree-1
// characters, then even degree-2 characters, then the 2^(n-1) faithful odd
// degree-2 characters induced from phi^c on <x> with c odd.
CharacterTable quaternion_table(unsigned n);
// Z/2 x A4 in the conventional order: (triv, omega, omega^2, std) tensor
// (triv, sign), sign factor fastest; degree-3 rows witnessed by the
// subgroup Z/2 x V (V the Klein subgroup).
CharacterTable z2a4_table();
// Tensor table of a product group; the first factor's rows vary fastest and
// must all have degree 1 for witness transport.
CharacterTable product_table(const CharacterTable& TA, const CharacterTable& TB,
                             const std::string& name = "");

std::string format_table_text(const CharacterTable& T);

}  // namespace bsf
