#pragma once

#include <array>
#include <compare>
#include <string>

#include "segre/rational.hpp"

// Numerical intersection theory on X = P^1 x P^2.
//
// Classes live in the truncated ring Q[f,l]/(f^2, l^3); a Chern character
// is stored by its coefficients on the basis (1, f, l, fl, l^2, fl^2).

namespace segre {

// aF + bL, with F the fibre class of X -> P^1 and L the pullback of a line.
struct DivisorClass {
  long long a = 0;
  long long b = 0;

  friend DivisorClass operator+(DivisorClass x, DivisorClass y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend DivisorClass operator-(DivisorClass x, DivisorClass y) {
    return {x.a - y.a, x.b - y.b};
  }
  DivisorClass operator-() const { return {-a, -b}; }
  bool operator==(const DivisorClass&) const = default;
};

inline constexpr DivisorClass kF{1, 0};
inline constexpr DivisorClass kL{0, 1};
inline constexpr DivisorClass kH{1, 1};
inline constexpr DivisorClass kCanonical{-2, -3};  // omega_X = O(-2F - 3L)

struct ChernCharacter {
  Rat r;    // coefficient of 1 (the rank)
  Rat f;    // f
  Rat l;    // l
  Rat fl;   // fl
  Rat ll;   // l^2
  Rat fll;  // fl^2

  bool operator==(const ChernCharacter&) const = default;

  ChernCharacter operator+(const ChernCharacter& o) const;
  ChernCharacter operator-(const ChernCharacter& o) const;
  ChernCharacter operator-() const;
  // Product in Q[f,l]/(f^2, l^3).
  ChernCharacter operator*(const ChernCharacter& o) const;
  ChernCharacter operator*(const Rat& s) const;
};

// Componentwise dual: signs (+,-,-,+,+,-) by parity of total degree.
ChernCharacter dualize(const ChernCharacter& u);

// Truncated exponential e^{af + bl}.
ChernCharacter ch_line(DivisorClass d);

// ch(Omega_pi(D)) = (3 ch(O(-L)) - ch(O)) * ch(O(D)); rank 2.
ChernCharacter ch_omega_pi(DivisorClass d);

// td(X) = (1 + f)(1 + 3l/2 + l^2).
ChernCharacter todd();

// chi(u, v) = integral of dualize(u) * v * td(X).
Rat euler_pairing(const ChernCharacter& u, const ChernCharacter& v);

// Plain Euler characteristic chi(v) = chi(ch(O), v).
Rat euler_characteristic(const ChernCharacter& v);

// Degree <= 3 polynomial in t with rational coefficients, c[i] on t^i.
struct HilbertPolynomial {
  std::array<Rat, 4> c{};

  bool operator==(const HilbertPolynomial&) const = default;
  Rat operator()(const Rat& t) const;
  HilbertPolynomial operator+(const HilbertPolynomial& o) const;
  HilbertPolynomial operator*(const Rat& s) const;
  int degree() const;  // -1 for the zero polynomial
  std::string str() const;
};

// P(u, t) = chi(u * ch_line(t, t)), as an exact polynomial in t.
HilbertPolynomial hilbert_poly(const ChernCharacter& u);

// P / r, defined for nonzero rank r.
HilbertPolynomial reduce_by_rank(const HilbertPolynomial& p, const Rat& rank);

enum class PolyOrder { Less, Equal, Greater };

// The order "p(t) <= q(t) for t >> 0": lexicographic on coefficients
// from the top degree down.
PolyOrder compare_reduced(const HilbertPolynomial& p, const HilbertPolynomial& q);

}  // namespace segre
