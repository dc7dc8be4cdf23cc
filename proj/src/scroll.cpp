#include "segre/scroll.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "segre/mutation.hpp"

namespace segre {

ScrollDescriptor::ScrollDescriptor(std::vector<long long> a)
    : degrees(std::move(a)) {
  if (degrees.empty())
    throw std::invalid_argument("ScrollDescriptor: empty degree sequence");
  long long prev = 0;
  for (long long x : degrees) {
    if (x < 1)
      throw std::invalid_argument("ScrollDescriptor: degrees must be >= 1");
    if (x < prev)
      throw std::invalid_argument("ScrollDescriptor: degrees must be sorted");
    prev = x;
  }
}

long long ScrollDescriptor::d() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0LL);
}

namespace {

// Accumulate h^0/h^1 on P^1 of Sym^m(direct sum of O(w_i)) (x) O(c):
// one summand O(sum e_i w_i + c) per exponent vector of weight m.
void sym_pushforward(const std::vector<long long>& w, long long m,
                     long long c, Int& h0, Int& h1) {
  const size_t n = w.size();
  std::vector<long long> e(n, 0);
  e[0] = m;
  while (true) {
    long long deg = c;
    for (size_t i = 0; i < n; ++i) deg += e[i] * w[i];
    if (deg >= 0) h0 += deg + 1;
    else h1 += -deg - 1;
    // next exponent vector in colex order
    size_t i = 0;
    while (i + 1 < n && e[i] == 0) ++i;
    if (i + 1 >= n) break;
    const long long head = e[i];
    e[i] = 0;
    e[0] = head - 1;
    e[i + 1] += 1;
  }
}

}  // namespace

std::vector<Int> scroll_coh(const ScrollDescriptor& s, ScrollDivisor dv) {
  const long long n = s.n();
  std::vector<Int> h(static_cast<size_t>(n) + 1, Int(0));
  if (dv.x >= 0) {
    // pi_* O(xH + yF) = Sym^x(O(a_1) + ... + O(a_n)) (x) O(y)
    sym_pushforward(s.degrees, dv.x, dv.y, h[0], h[1]);
  } else if (dv.x <= -n) {
    // R^{n-1} pi_*: fibrewise Serre duality,
    // Sym^{-x-n}(O(-a_1) + ... + O(-a_n)) (x) O(y - d).
    std::vector<long long> neg(s.degrees);
    for (auto& v : neg) v = -v;
    sym_pushforward(neg, -dv.x - n, dv.y - s.d(), h[static_cast<size_t>(n) - 1],
                    h[static_cast<size_t>(n)]);
  }
  // -n < x < 0: all direct images vanish.
  return h;
}

Int scroll_chi(const ScrollDescriptor& s, ScrollDivisor dv) {
  Int chi = 0;
  const std::vector<Int> h = scroll_coh(s, dv);
  for (size_t i = 0; i < h.size(); ++i) chi += i % 2 == 0 ? h[i] : -h[i];
  return chi;
}

namespace {

void require_range(long long n, long long d) {
  if (n < 2 || d < n)
    throw std::invalid_argument("scroll: require d >= n >= 2");
}

}  // namespace

Int scroll_ell(long long n, long long d) {
  require_range(n, d);
  return Int((n - 1) * d - n);
}

Int chi_L_dual(long long n, long long d) {
  require_range(n, d);
  return Int(2 * n + (1 - n) * d);
}

Int dimext_bound(long long n, long long d, long long k) {
  require_range(n, d);
  if (k < 0) throw std::invalid_argument("dimext_bound: k must be >= 0");
  const long long ell = static_cast<long long>(scroll_ell(n, d));
  return a_seq(ell, k + 1) * ((n - 1) * d - 2 * n) - 2 * a_seq(ell, k);
}

WildnessCaseReport verify_wildness_cases(long long n, long long d) {
  require_range(n, d);
  long long k;
  if (n >= 4) k = 0;
  else if (n == 3 && d >= 4) k = 1;
  else if (n == 2 && d >= 5) k = 3;
  else
    throw std::invalid_argument(
        "verify_wildness_cases: (n, d) outside the covered ranges");
  WildnessCaseReport r;
  r.k = k;
  r.ell = scroll_ell(n, d);
  r.bound = dimext_bound(n, d, k);
  r.pass = r.bound >= 3;
  const long long ell = static_cast<long long>(r.ell);
  r.mult_sub = a_seq(ell, k);
  r.mult_quot = a_seq(ell, k + 1);
  std::ostringstream os;
  os << "U_" << k << ": 0 -> O(-F)^" << r.mult_sub << " -> U -> L^"
     << r.mult_quot << " -> 0, dim Ext^1(U, O) >= " << r.bound;
  r.detail = os.str();
  return r;
}

}  // namespace segre
