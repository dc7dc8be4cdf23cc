#include "segre/wildness.hpp"

#include <stdexcept>

namespace segre {

WildVerdict cm_wild_criterion(const WildnessInput& w) {
  // Base hypotheses: rpB strictly below rpA for t >> 0, and at least a
  // 3-dimensional space of extensions of B by A.
  if (compare_reduced(w.rpB, w.rpA) != PolyOrder::Less)
    return WildVerdict::Inconclusive;
  if (w.ext1_dim < 3) return WildVerdict::Inconclusive;

  if (w.n >= 2) {
    // Upgrade when A and B are not Ulrich initialized by the same integer:
    // either initialization absent, or both present and different.
    const bool same_init = w.ulrich_init_A && w.ulrich_init_B &&
                           *w.ulrich_init_A == *w.ulrich_init_B;
    return same_init ? WildVerdict::CMWild : WildVerdict::NonUlrichCMWild;
  }
  if (w.n == 1) {
    // Upgrade when certified vanishing loci of H^0(A(t)) and H^1(B(t))
    // never meet. Absent certificates never upgrade.
    if (w.h0A_vanishing && w.h1B_vanishing &&
        window_empty(window_intersect(*w.h0A_vanishing, *w.h1B_vanishing)))
      return WildVerdict::NonUlrichCMWild;
    return WildVerdict::CMWild;
  }
  return WildVerdict::CMWild;
}

void validate(const DelPezzoDatum& d) {
  const long long min_a = d.kind == DelPezzoCase::BlowUp ? 2 : 1;
  if (d.a < min_a)
    throw std::invalid_argument("DelPezzoDatum: a below the minimum");
  if (d.b < 1) throw std::invalid_argument("DelPezzoDatum: b must be >= 1");
}

Int dp_family_dim(const DelPezzoDatum& d) {
  validate(d);
  const Int a = d.a, b = d.b;
  const Int mixed = d.kind == DelPezzoCase::BlowUp ? 3 * a * b : 4 * a * b;
  return mixed - a * a - b * b + 1;
}

Int dp_kernel_chi(const DelPezzoDatum& d) {
  validate(d);
  return d.kind == DelPezzoCase::BlowUp ? Int(3 * (d.b - 2 * d.a))
                                        : Int(2 * (d.b - 4 * d.a));
}

long long dp_b_threshold(const DelPezzoDatum& d) {
  validate(d);
  return d.kind == DelPezzoCase::BlowUp ? 2 * d.a : 3 * d.a;
}

bool dp_construction_valid(const DelPezzoDatum& d) {
  validate(d);
  return dp_family_dim(d) > 0 && d.b >= dp_b_threshold(d);
}

bool dp_nonulrich_check(const DelPezzoDatum& d, long long deg) {
  validate(d);
  const Int chi = dp_kernel_chi(d);
  return d.b > dp_b_threshold(d) && chi > 0 && chi < Int(deg) * (d.b - d.a);
}

QuasiMinimalExtTable quasi_minimal_ext_table(long long N, bool cone) {
  if (N < 3)
    throw std::invalid_argument("quasi_minimal_ext_table: N must be >= 3");
  QuasiMinimalExtTable t;
  const Int diag = cone ? Int(N + 1) : Int(5);
  const Int off = cone ? Int(N) : Int(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      t.hom[i][j] = i == j ? 1 : 0;
      t.ext1[i][j] = i == j ? diag : off;
    }
  t.ext2_vanishes = !cone;
  return t;
}

}  // namespace segre
