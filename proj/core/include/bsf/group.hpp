#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace bsf {

// A finite group presented by its full multiplication table. Element 0 is the
// identity. Family constructors fix a canonical enumeration (powers/normal
// forms of the presentation generators), so element indices, labels and class
// order are reproducible run to run.
class FiniteGroup {
 public:
  std::string name;
  unsigned n = 1;
  std::vector<unsigned> table;  // n*n, table[a*n+b] = a*b
  std::vector<unsigned> inv;
  std::vector<std::string> labels;                        // labels[0] == "1"
  std::vector<std::pair<std::string, unsigned>> generators;  // label -> element

  // Set when the group was built as direct_product(A, B): element index is
  // a * factor_b_size + b. Zero otherwise.
  unsigned factor_a_size = 0;
  unsigned factor_b_size = 0;

  unsigned mul(unsigned a, unsigned b) const { return table[a * n + b]; }
  unsigned inverse(unsigned a) const { return inv[a]; }
  unsigned order() const { return n; }
  unsigned element_order(unsigned a) const;
  bool is_central(unsigned a) const;
  bool is_abelian() const;

  // Latin-square, identity, inverse and associativity checks (associativity
  // via Light's test on a generating set). Throws std::invalid_argument.
  void validate() const;

  std::string label_of(unsigned a) const { return labels[a]; }
  // Word in generator/element labels: factors joined by '*', each optionally
  // carrying an integer exponent, e.g. "x^2*y", "(empty)" is not allowed,
  // "1" is the identity.
  unsigned evaluate_word(const std::string& word) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;
inline GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

struct Subgroup {
  std::vector<unsigned> members;  // sorted, contains 0
  unsigned order() const { return static_cast<unsigned>(members.size()); }
  bool contains(unsigned g) const;
};

struct ConjClassPartition {
  std::vector<std::vector<unsigned>> classes;  // each sorted; classes ordered by smallest member
  std::vector<unsigned> class_of;
  std::vector<unsigned> reps;  // smallest member of each class
  unsigned count() const { return static_cast<unsigned>(classes.size()); }
};

// ----- family constructors -----

FiniteGroup cyclic(unsigned n, const std::string& gen_label = "x");
// Dihedral group of order N = 2M (N >= 4, even): <x, y | x^M = y^2 = 1, yxy^-1 = x^-1>.
FiniteGroup dihedral(unsigned N, const std::array<std::string, 2>& gen_labels = {"x", "y"});
// Generalized quaternion group of order 2^(n+2), n >= 1:
// <x, y | x^(2^n) = y^2, x^(2^(n+1)) = 1, yxy^-1 = x^-1>.
FiniteGroup generalized_quaternion(unsigned n);
// Alternating group on four letters, generated by x = (12)(34), y = (123).
FiniteGroup alternating4(const std::array<std::string, 2>& gen_labels = {"x", "y"});
// Z/2 x A4 with the central involution labelled j.
FiniteGroup z2_times_a4();
// Direct product; element (a, b) gets index a*|B| + b. Labels compose with
// the B part first ("s*j" for (j, s)), matching the usual CM notation where
// the central involution is written last.
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, const std::string& name = "");

FiniteGroup group_from_table(std::string name, unsigned order, std::vector<unsigned> table);

// ----- serialization -----
// Header "group <name> <order>" followed by the table, one row per line.
std::string group_to_text(const FiniteGroup& G);
FiniteGroup group_from_text(const std::string& text);

// ----- structure -----

ConjClassPartition conjugacy_classes(const FiniteGroup& G);
std::vector<unsigned> center_elements(const FiniteGroup& G);
// The unique central element of order 2; throws if there is none or several.
unsigned complex_conjugation_element(const FiniteGroup& G);

Subgroup closure(const FiniteGroup& G, std::vector<unsigned> gens);
// All subgroups, sorted by (order, members lexicographically).
// Guarded to |G| <= 1000.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
Subgroup commutator_subgroup(const FiniteGroup& G);
std::vector<unsigned> greedy_generators(const FiniteGroup& G);

// A subgroup reindexed as a standalone group. to_parent maps H-indices to
// G-indices; from_parent is the partial inverse (UINT_MAX off the subgroup).
struct SubgroupAsGroup {
  FiniteGroup H;
  std::vector<unsigned> to_parent;
  std::vector<unsigned> from_parent;
};
SubgroupAsGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& S);

// G/N with cosets enumerated by their smallest representative.
struct QuotientResult {
  FiniteGroup Q;
  std::vector<unsigned> projection;  // G index -> Q index
  std::vector<unsigned> section;     // Q index -> smallest representative in G
};
QuotientResult quotient(const FiniteGroup& G, const Subgroup& N);
QuotientResult abelianization(const FiniteGroup& G);

}  // namespace bsf
