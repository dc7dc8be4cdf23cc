#pragma once

#include <array>
#include <optional>

#include "segre/chow.hpp"
#include "segre/cohomology.hpp"

// Checkers for the CM-wildness criterion and the del Pezzo /
// quasi-minimal numerical constructions. The checker consumes numerical
// certificates; it never builds the sheaves themselves.

namespace segre {

struct WildnessInput {
  long long n = 0;               // dimension of X
  HilbertPolynomial rpA, rpB;    // reduced Hilbert polynomials
  Int ext1_dim;                  // dim Ext^1(B, A)
  std::optional<long long> ulrich_init_A;  // Ulrich initialization, if any
  std::optional<long long> ulrich_init_B;
  // n = 1 clause: certified vanishing loci of H^0(A(t)) and H^1(B(t)).
  std::optional<TwistWindow> h0A_vanishing;
  std::optional<TwistWindow> h1B_vanishing;
};

enum class WildVerdict { CMWild, NonUlrichCMWild, Inconclusive };

WildVerdict cm_wild_criterion(const WildnessInput& w);

enum class DelPezzoCase { BlowUp, Quadric };

// (a, b) data for the kernel-bundle construction on a del Pezzo surface.
struct DelPezzoDatum {
  DelPezzoCase kind = DelPezzoCase::BlowUp;
  long long a = 0;
  long long b = 0;
};

void validate(const DelPezzoDatum& d);  // throws on invariant violation

// D(a,b) = 3ab - a^2 - b^2 + 1 (blow-up) or 4ab - a^2 - b^2 + 1 (quadric).
Int dp_family_dim(const DelPezzoDatum& d);
// chi of the kernel bundle: 3(b - 2a) or 2(b - 4a).
Int dp_kernel_chi(const DelPezzoDatum& d);
// b_a = 2a or 3a.
long long dp_b_threshold(const DelPezzoDatum& d);
// The construction needs D(a,b) > 0 and b >= b_a.
bool dp_construction_valid(const DelPezzoDatum& d);
// Non-Ulrich certificate: b > b_a and 0 < chi < deg (b - a).
bool dp_nonulrich_check(const DelPezzoDatum& d, long long deg);

// Reference Hom/Ext^1 dimensions for the quasi-minimal pair (A_1, A_2):
// Hom diagonal 1, off-diagonal 0; Ext^1 diagonal/off-diagonal 5/4 in the
// smooth case, (N+1)/N on a cone. Ext^{>=2} = 0 in the smooth case.
struct QuasiMinimalExtTable {
  std::array<std::array<Int, 2>, 2> hom;
  std::array<std::array<Int, 2>, 2> ext1;
  bool ext2_vanishes = false;
};

QuasiMinimalExtTable quasi_minimal_ext_table(long long N, bool cone);

}  // namespace segre
