#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segre/cohomology.hpp"

using namespace segre;

namespace {

// Brute-force oracle for line bundles: the twist windows (recomputed here
// from scratch) locate the single possibly-nonzero degree; HRR gives its
// dimension as a signed Euler characteristic.
CohVector line_oracle(long long a, long long b, long long t) {
  const long long x = a + t, y = b + t;
  const bool p1h0 = x >= 0, p1h1 = x <= -2;
  const bool p2h0 = y >= 0, p2h2 = y <= -3;
  int deg = -1;
  if (p1h0 && p2h0) deg = 0;
  else if (p1h1 && p2h0) deg = 1;
  else if (p1h0 && p2h2) deg = 2;
  else if (p1h1 && p2h2) deg = 3;
  CohVector v;
  if (deg >= 0) {
    const Rat chi = euler_characteristic(ch_line({x, y}));
    Rat dim = deg % 2 == 0 ? chi : -chi;
    REQUIRE(dim >= 0);
    v.h[static_cast<size_t>(deg)] =
        static_cast<long long>(numerator(dim));
  }
  return v;
}

FormalSheaf sum_of(BuildingBlock b, long long m = 1) {
  return FormalSheaf{{{b, m}}};
}

ExtensionSheaf ulrich_ext(long long a, long long b) {
  return {sum_of(line_bundle(-1, 0), a), sum_of(line_bundle(1, -1), b)};
}

}  // namespace

TEST_CASE("factor cohomology") {
  CHECK(coh_p1(0) == std::pair<long long, long long>{1, 0});
  CHECK(coh_p1(-1) == std::pair<long long, long long>{0, 0});
  CHECK(coh_p1(-3) == std::pair<long long, long long>{0, 2});
  CHECK(coh_p2_line(1) == std::array<long long, 3>{3, 0, 0});
  CHECK(coh_p2_line(-2) == std::array<long long, 3>{0, 0, 0});
  CHECK(coh_p2_line(-3) == std::array<long long, 3>{0, 0, 1});
  CHECK(coh_p2_omega(2) == std::array<long long, 3>{3, 0, 0});
  CHECK(coh_p2_omega(0) == std::array<long long, 3>{0, 1, 0});
  CHECK(coh_p2_omega(-3) == std::array<long long, 3>{0, 0, 8});
}

TEST_CASE("coh_block examples") {
  CHECK(coh_block(line_bundle(-2, 1), 0) == CohVector{{0, 3, 0, 0}});
  CHECK(coh_block(line_bundle(1, -1), -1) == CohVector{{0, 0, 0, 0}});
  CHECK(coh_block(omega_pi(0, 0), 0) == CohVector{{0, 1, 0, 0}});
}

TEST_CASE("Kunneth equals the window-scan oracle") {
  for (long long a = -8; a <= 8; ++a)
    for (long long b = -8; b <= 8; ++b)
      for (long long t = -8; t <= 8; ++t)
        CHECK(coh_block(line_bundle(a, b), t) == line_oracle(a, b, t));
}

TEST_CASE("chi consistency for blocks") {
  for (long long a = -8; a <= 8; ++a)
    for (long long b = -8; b <= 8; ++b)
      for (long long t = -8; t <= 8; ++t) {
        for (BlockKind k : {BlockKind::LineBundle, BlockKind::OmegaPi}) {
          const BuildingBlock blk{k, {a, b}};
          CHECK(coh_block(blk, t).chi() ==
                euler_characteristic(blk.ch() * ch_line({t, t})));
        }
      }
}

TEST_CASE("Serre duality on line-bundle blocks") {
  for (long long a = -6; a <= 6; ++a)
    for (long long b = -6; b <= 6; ++b)
      for (long long t = -6; t <= 6; ++t) {
        const CohVector u = coh_block(line_bundle(a, b), t);
        const CohVector v = coh_block(line_bundle(-a - 2, -b - 3), -t);
        for (int i = 0; i < 4; ++i) CHECK(u.h[i] == v.h[3 - i]);
      }
}

TEST_CASE("twist windows") {
  const TwistWindow w1 = coh_window_block(line_bundle(0, 2), 1);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0] == TwistInterval{-2, -2});
  CHECK(window_empty(coh_window_block(line_bundle(1, -1), 1)));
  const TwistWindow w0 = coh_window_block(line_bundle(0, 0), 0);
  REQUIRE(w0.size() == 1);
  CHECK(w0[0].lo == 0);
  CHECK(!w0[0].hi);
}

TEST_CASE("block windows are sound and complete") {
  for (long long a = -6; a <= 6; ++a)
    for (long long b = -6; b <= 6; ++b)
      for (BlockKind k : {BlockKind::LineBundle, BlockKind::OmegaPi}) {
        const BuildingBlock blk{k, {a, b}};
        for (int i = 0; i < 4; ++i) {
          const TwistWindow w = coh_window_block(blk, i);
          for (long long t = -20; t <= 20; ++t)
            CHECK(window_contains(w, t) ==
                  (coh_block(blk, t).h[static_cast<size_t>(i)] > 0));
        }
      }
}

TEST_CASE("formal sums and extensions") {
  CHECK(coh_formal(sum_of(line_bundle(0, 0), 2), 0) == CohVector{{2, 0, 0, 0}});

  const ExtensionSheaf e13 = ulrich_ext(1, 3);
  const CohInterval c = coh_extension(e13, 0);
  CHECK(c.exact());
  CHECK(c.as_exact() == CohVector{{0, 0, 0, 0}});

  // At t = -3 everything sits in h^3 and the LES forces additivity.
  const ExtensionSheaf e11 = ulrich_ext(1, 1);
  const CohInterval c3 = coh_extension(e11, -3);
  CHECK(c3.exact());
  CohVector sum;
  for (int i = 0; i < 4; ++i)
    sum.h[i] = coh_block(line_bundle(-1, 0), -3).h[i] +
               coh_block(line_bundle(1, -1), -3).h[i];
  CHECK(c3.as_exact() == sum);
  CHECK(sum.h[3] == 6);
}

TEST_CASE("Ulrich extensions are exact and additive at every twist") {
  for (long long a = 1; a <= 3; ++a)
    for (long long b = 1; b <= 3; ++b)
      for (long long t = -8; t <= 8; ++t) {
        const CohInterval c = coh_extension(ulrich_ext(a, b), t);
        CHECK(c.exact());
        CohVector sum;
        for (int i = 0; i < 4; ++i)
          sum.h[i] = a * coh_block(line_bundle(-1, 0), t).h[i] +
                     b * coh_block(line_bundle(1, -1), t).h[i];
        CHECK(c.as_exact() == sum);
      }
}

TEST_CASE("is_acm") {
  // Line bundles: ACM iff -1 <= a - b <= 2, against a brute twist scan.
  for (long long a = -6; a <= 6; ++a)
    for (long long b = -6; b <= 6; ++b) {
      bool scan_acm = true;
      for (long long t = -20; t <= 20; ++t) {
        const CohVector v = line_oracle(a, b, t);
        if (v.h[1] != 0 || v.h[2] != 0) scan_acm = false;
      }
      CHECK(scan_acm == (-1 <= a - b && a - b <= 2));
      CHECK(is_acm(Sheaf{sum_of(line_bundle(a, b))}).acm == scan_acm);
    }
  CHECK(is_acm(Sheaf{sum_of(omega_pi(0, 1))}).acm);
  const AcmResult r = is_acm(Sheaf{sum_of(line_bundle(0, 2))});
  CHECK(!r.acm);
  CHECK(r.witness_i == 1);
  CHECK(r.witness_t == -2);
}

TEST_CASE("ulrich_init") {
  CHECK(ulrich_init(Sheaf{sum_of(line_bundle(1, -1))}) == 1);
  CHECK(ulrich_init(Sheaf{sum_of(omega_pi(0, 1))}) == 1);
  CHECK(!ulrich_init(Sheaf{sum_of(line_bundle(0, 0))}));
}

TEST_CASE("Ulrich rank-degree law") {
  std::vector<Sheaf> inputs = {Sheaf{sum_of(line_bundle(1, -1))},
                               Sheaf{sum_of(omega_pi(0, 1))}};
  for (long long a = 1; a <= 6; ++a)
    for (long long b = 1; b <= 6; ++b) inputs.emplace_back(ulrich_ext(a, b));
  for (const Sheaf& s : inputs) {
    const auto t = ulrich_init(s);
    REQUIRE(t);
    const CohInterval c = coh_sheaf(s, *t);
    CHECK(c.exact());
    CHECK(c.lo[0] == 3 * sheaf_rank(s));
  }
}

TEST_CASE("ext_blocks") {
  // Hom(E_1, E_0) = Hom(O(F-L), O(-L)) = 0, exact.
  const CohInterval e10 = ext_blocks(line_bundle(1, -1), line_bundle(0, -1));
  CHECK(e10.exact());
  CHECK(e10.as_exact() == CohVector{{0, 0, 0, 0}});

  const CohInterval eoo = ext_blocks(line_bundle(0, 0), line_bundle(0, 0));
  CHECK(eoo.exact());
  CHECK(eoo.as_exact() == CohVector{{1, 0, 0, 0}});

  const CohInterval e1 = ext_blocks(line_bundle(1, -1), line_bundle(-1, 0));
  CHECK(e1.exact());
  CHECK(e1.as_exact() == CohVector{{0, 3, 0, 0}});
}

TEST_CASE("ext_blocks degenerates to cohomology for A = O") {
  for (long long a = -4; a <= 4; ++a)
    for (long long b = -4; b <= 4; ++b)
      for (BlockKind k : {BlockKind::LineBundle, BlockKind::OmegaPi}) {
        const BuildingBlock blk{k, {a, b}};
        const CohInterval e = ext_blocks(line_bundle(0, 0), blk);
        CHECK(e.exact());
        CHECK(e.as_exact() == coh_block(blk, 0));
      }
}

TEST_CASE("Omega-vs-Omega Ext intervals are consistent") {
  // Ext^*(Omega_pi, Omega_pi) = (1,0,0,0); the interval must contain it
  // and its chi must match the pairing.
  const CohInterval e = ext_blocks(omega_pi(0, 0), omega_pi(0, 0));
  CHECK(e.lo[0] <= 1);
  CHECK(e.hi[0] >= 1);
  for (int i = 1; i < 4; ++i) CHECK(e.lo[i] == 0);
  const Rat chi = euler_pairing(ch_omega_pi({0, 0}), ch_omega_pi({0, 0}));
  CHECK(chi == 1);
}
