#pragma once

#include "bsf/rational.hpp"

#include <string>
#include <vector>

namespace bsf {

unsigned euler_phi(unsigned n);
int mobius(unsigned n);
std::vector<unsigned> divisors_of(unsigned n);

// n-th cyclotomic polynomial, monic with integer coefficients;
// coeffs[i] is the coefficient of x^i and coeffs.back() == 1. Cached.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned n);

// The automorphism of Q(zeta_n) sending zeta_n to zeta_n^a, gcd(a, n) = 1.
// Exponents are kept in the canonical range [1, n].
struct GaloisAutomorphism {
  unsigned exponent = 1;
  unsigned modulus = 1;

  GaloisAutomorphism() = default;
  GaloisAutomorphism(unsigned a, unsigned n);

  // this o other. Equal moduli compose inside (Z/n)^*; unequal moduli are
  // restricted to the common subfield Q(zeta_gcd), the largest field on which
  // both are canonically defined.
  GaloisAutomorphism compose(const GaloisAutomorphism& other) const;

  bool is_identity() const { return exponent % modulus == 1 % modulus; }
  bool operator==(const GaloisAutomorphism&) const = default;
  std::string str() const;
};

// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1)
// of Z[zeta_n], with coordinates reduced modulo the n-th cyclotomic
// polynomial. Values of different orders are compared/combined after
// embedding both into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_(1) {}
  Cyclotomic(long long v) : order_(1), c_(1, Rational(v)) {}
  explicit Cyclotomic(const Rational& r, unsigned order = 1);

  static Cyclotomic zeta(unsigned n, long long power = 1);
  static Cyclotomic from_coords(unsigned n, std::vector<Rational> coords);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws unless is_rational()
  // Integrality over Z, i.e. membership in Z[zeta_n]: every coordinate is an
  // integer (the power basis is an integral basis).
  bool is_integral() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  bool operator==(const Cyclotomic& o) const;

  Cyclotomic inverse() const;  // throws on zero
  Cyclotomic pow(long long k) const;

  // Re-expression in Q(zeta_m). embedded() requires order() | m; in_field()
  // accepts any m with *this in Q(zeta_m) and solves for the coordinates.
  Cyclotomic embedded(unsigned m) const;
  bool lies_in(unsigned m) const;
  Cyclotomic in_field(unsigned m) const;

  // Smallest divisor d of order() with *this in Q(zeta_d) — the conductor of
  // the cyclotomic closure of Q(*this).
  unsigned minimal_field_order() const;

  // Galois action. When order() divides the modulus the automorphism
  // restricts canonically; otherwise every lift to Q(zeta_lcm) is tried and
  // the action must be unambiguous on this element.
  Cyclotomic apply(const GaloisAutomorphism& sigma) const;
  Cyclotomic galois(unsigned a) const;  // sigma_a on Q(zeta_order())
  Cyclotomic conjugate() const;         // complex conjugation, sigma_(n-1)

  Rational trace_to_rationals() const;  // Tr from Q(zeta_order()) down to Q

  std::string str() const;  // e.g. "1/2 - 3*z12^5"

 private:
  unsigned order_;
  std::vector<Rational> c_;

  void promote_to(unsigned m);  // order_ | m
};

// Membership in the inverse different D^(-1)(Q(zeta_m)/Q) = (1/Phi_m'(zeta_m)) Z[zeta_m].
// Requires x in Q(zeta_m) (checked via minimal-field detection).
bool in_inverse_different(const Cyclotomic& x, unsigned m);

// Phi_m'(zeta_m) as an element of Q(zeta_m).
Cyclotomic cyclotomic_derivative_value(unsigned m);

// A subfield K of Q(zeta_m) presented by its conductor m and the subgroup
// H' <= (Z/m)^* fixing it, so Gal(Q(zeta_m)/K) = H' and [K:Q] = phi(m)/|H'|.
// O_K = Z[eta] for eta = Tr_{Q(zeta_m)/K}(zeta_m), which makes the different
// of K/Q the principal ideal (f'(eta)) for f the minimal polynomial of eta.
struct CyclotomicSubfield {
  unsigned conductor = 1;
  std::vector<unsigned> stabilizer = {1};  // sorted, subgroup of (Z/m)^*

  unsigned degree() const;
  bool contains(const Cyclotomic& x) const;
};

Cyclotomic subfield_integral_generator(const CyclotomicSubfield& K);      // eta
std::vector<Rational> subfield_minimal_polynomial(const CyclotomicSubfield& K);
Cyclotomic subfield_different_generator(const CyclotomicSubfield& K);     // f'(eta)
// Membership in D^(-1)(K/Q); requires x in K.
bool in_subfield_inverse_different(const Cyclotomic& x, const CyclotomicSubfield& K);

}  // namespace bsf
