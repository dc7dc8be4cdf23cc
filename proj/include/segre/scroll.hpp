#pragma once

#include <string>
#include <vector>

#include "segre/rational.hpp"

// Line-bundle cohomology on rational normal scrolls S(a_1,...,a_n) via
// pushforward to P^1, and the wildness quantities and bounds attached
// to the Fibonacci ladder there.

namespace segre {

// Non-decreasing positive degrees; d = sum, N = d + n - 1.
struct ScrollDescriptor {
  std::vector<long long> degrees;

  explicit ScrollDescriptor(std::vector<long long> a);  // validates
  long long n() const { return static_cast<long long>(degrees.size()); }
  long long d() const;
  long long ambient_dim() const { return d() + n() - 1; }
};

// xH + yF on the scroll.
struct ScrollDivisor {
  long long x = 0;
  long long y = 0;
};

// Exact h^0..h^n of O(xH + yF); index i holds h^i.
std::vector<Int> scroll_coh(const ScrollDescriptor& s, ScrollDivisor dv);

Int scroll_chi(const ScrollDescriptor& s, ScrollDivisor dv);

// l = (n-1)d - n and chi(L^dual) = 2n + (1-n)d; require d >= n >= 2.
Int scroll_ell(long long n, long long d);
Int chi_L_dual(long long n, long long d);

// The lower bound a_{l,k+1}((n-1)d - 2n) - 2 a_{l,k} for
// dim Ext^1(U_k, O); requires d >= n >= 2 and k >= 0.
Int dimext_bound(long long n, long long d, long long k);

struct WildnessCaseReport {
  bool pass = false;
  long long k = 0;  // the ladder index chosen for this (n, d)
  Int ell;
  Int bound;        // dimext_bound(n, d, k), compared against 3
  Int mult_sub;     // a_{l,k}   copies of O(-F)
  Int mult_quot;    // a_{l,k+1} copies of L
  std::string detail;
};

// Picks k = 0 (n >= 4), 1 (n = 3, d >= 4), 3 (n = 2, d >= 5), checks the
// bound >= 3 and reports the Ulrich data. Throws for (n, d) outside the
// covered ranges.
WildnessCaseReport verify_wildness_cases(long long n, long long d);

}  // namespace segre
