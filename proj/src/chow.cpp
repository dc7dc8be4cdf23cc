#include "segre/chow.hpp"

#include <sstream>
#include <stdexcept>

namespace segre {

ChernCharacter ChernCharacter::operator+(const ChernCharacter& o) const {
  return {r + o.r, f + o.f, l + o.l, fl + o.fl, ll + o.ll, fll + o.fll};
}

ChernCharacter ChernCharacter::operator-(const ChernCharacter& o) const {
  return {r - o.r, f - o.f, l - o.l, fl - o.fl, ll - o.ll, fll - o.fll};
}

ChernCharacter ChernCharacter::operator-() const {
  return {-r, -f, -l, -fl, -ll, -fll};
}

ChernCharacter ChernCharacter::operator*(const ChernCharacter& o) const {
  ChernCharacter w;
  w.r = r * o.r;
  w.f = r * o.f + f * o.r;
  w.l = r * o.l + l * o.r;
  w.fl = r * o.fl + f * o.l + l * o.f + fl * o.r;
  w.ll = r * o.ll + l * o.l + ll * o.r;
  w.fll = r * o.fll + f * o.ll + l * o.fl + fl * o.l + ll * o.f + fll * o.r;
  return w;
}

ChernCharacter ChernCharacter::operator*(const Rat& s) const {
  return {r * s, f * s, l * s, fl * s, ll * s, fll * s};
}

ChernCharacter dualize(const ChernCharacter& u) {
  return {u.r, -u.f, -u.l, u.fl, u.ll, -u.fll};
}

ChernCharacter ch_line(DivisorClass d) {
  const Rat a = d.a, b = d.b;
  // e^{af} e^{bl} = (1 + af)(1 + bl + b^2 l^2 / 2), truncated.
  return {1, a, b, a * b, b * b / 2, a * b * b / 2};
}

ChernCharacter ch_omega_pi(DivisorClass d) {
  const ChernCharacter base =
      ch_line({0, -1}) * Rat(3) - ch_line({0, 0});
  return base * ch_line(d);
}

ChernCharacter todd() {
  return {1, 1, Rat(3) / 2, Rat(3) / 2, 1, 1};
}

Rat euler_pairing(const ChernCharacter& u, const ChernCharacter& v) {
  return (dualize(u) * v * todd()).fll;
}

Rat euler_characteristic(const ChernCharacter& v) {
  return euler_pairing(ch_line({0, 0}), v);
}

Rat HilbertPolynomial::operator()(const Rat& t) const {
  return ((c[3] * t + c[2]) * t + c[1]) * t + c[0];
}

HilbertPolynomial HilbertPolynomial::operator+(const HilbertPolynomial& o) const {
  HilbertPolynomial s;
  for (int i = 0; i < 4; ++i) s.c[i] = c[i] + o.c[i];
  return s;
}

HilbertPolynomial HilbertPolynomial::operator*(const Rat& s) const {
  HilbertPolynomial p;
  for (int i = 0; i < 4; ++i) p.c[i] = c[i] * s;
  return p;
}

int HilbertPolynomial::degree() const {
  for (int i = 3; i >= 0; --i)
    if (c[i] != 0) return i;
  return -1;
}

std::string HilbertPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 3; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << (c[i] > 0 ? " + " : " - ");
    else if (c[i] < 0) os << "-";
    Rat m = c[i] > 0 ? c[i] : Rat(-c[i]);
    if (m != 1 || i == 0) os << m;
    if (i > 0) {
      if (m != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

HilbertPolynomial hilbert_poly(const ChernCharacter& u) {
  // chi(u * ch_line(t,t)) is a degree <= 3 polynomial in t; four exact
  // evaluations determine it.
  std::array<Rat, 4> v;
  for (long long t = 0; t < 4; ++t)
    v[static_cast<size_t>(t)] =
        euler_characteristic(u * ch_line({t, t}));
  HilbertPolynomial p;
  // Newton forward differences on the nodes 0,1,2,3.
  const Rat d0 = v[0];
  const Rat d1 = v[1] - v[0];
  const Rat d2 = v[2] - 2 * v[1] + v[0];
  const Rat d3 = v[3] - 3 * v[2] + 3 * v[1] - v[0];
  // p(t) = d0 + d1 t + d2 t(t-1)/2 + d3 t(t-1)(t-2)/6
  p.c[0] = d0;
  p.c[1] = d1 - d2 / 2 + d3 / 3;
  p.c[2] = d2 / 2 - d3 / 2;
  p.c[3] = d3 / 6;
  return p;
}

HilbertPolynomial reduce_by_rank(const HilbertPolynomial& p, const Rat& rank) {
  if (rank == 0) throw std::invalid_argument("reduce_by_rank: zero rank");
  return p * (Rat(1) / rank);
}

PolyOrder compare_reduced(const HilbertPolynomial& p, const HilbertPolynomial& q) {
  for (int i = 3; i >= 0; --i) {
    if (p.c[i] < q.c[i]) return PolyOrder::Less;
    if (p.c[i] > q.c[i]) return PolyOrder::Greater;
  }
  return PolyOrder::Equal;
}

}  // namespace segre
