#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segre/cohomology.hpp"
#include "segre/mutation.hpp"

using namespace segre;

TEST_CASE("c_seq values and symmetry") {
  const long long want[] = {0, 1, 3, 8, 21, 55, 144};
  for (long long k = 0; k <= 6; ++k) {
    CHECK(c_seq(k) == want[k]);
    CHECK(c_seq(-k) == want[k]);
  }
}

TEST_CASE("Cassini identity for c_seq") {
  // c_{k+1} c_{k-1} - c_k^2 = -1 away from the symmetry point k = 0.
  for (long long k = 1; k <= 12; ++k) {
    CHECK(c_seq(k + 1) * c_seq(k - 1) - c_seq(k) * c_seq(k) == -1);
    CHECK(c_seq(-k + 1) * c_seq(-k - 1) - c_seq(-k) * c_seq(-k) == -1);
  }
  CHECK(c_seq(1) * c_seq(-1) - c_seq(0) * c_seq(0) == 1);
}

TEST_CASE("a_seq specializations") {
  for (long long k = 0; k <= 10; ++k) {
    CHECK(a_seq(3, k) == c_seq(k));
    CHECK(a_seq(2, k) == k);
  }
  CHECK(a_seq(5, 3) == 24);
  CHECK_THROWS_AS(a_seq(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(a_seq(3, -1), std::invalid_argument);
}

TEST_CASE("ulrich_class anchors") {
  const UlrichDatum u0 = ulrich_class(0);
  CHECK(u0.a == 1);
  CHECK(u0.b == 0);
  CHECK(u0.cls == ch_line({-1, 0}));

  const UlrichDatum u1 = ulrich_class(1);
  CHECK(u1.a == 0);
  CHECK(u1.b == 1);
  CHECK(u1.cls == ch_line({1, -1}));

  const UlrichDatum u3 = ulrich_class(3);
  CHECK(u3.a == 3);
  CHECK(u3.b == 8);
  CHECK(u3.rank == 11);
}

TEST_CASE("mutation ladder regenerates the classes") {
  // Left mutations climb: L_{U_{k+1}} U_k = U_{k+2}.
  for (long long k = 0; k <= 8; ++k) {
    const ChernCharacter got = left_mutation_class(ulrich_class(k + 1).cls,
                                                   ulrich_class(k).cls);
    CHECK(got == ulrich_class(k + 2).cls);
  }
  // Right mutations descend: R_{U_k} U_{k+1} = U_{k-1}.
  for (long long k = -7; k <= 0; ++k) {
    const ChernCharacter got = right_mutation_class(ulrich_class(k).cls,
                                                    ulrich_class(k + 1).cls);
    CHECK(got == ulrich_class(k - 1).cls);
  }
}

TEST_CASE("numerical rigidity of the ladder") {
  for (long long k = -8; k <= 8; ++k)
    CHECK(is_numerically_rigid(ulrich_class(k)));
}

TEST_CASE("serre involution sends k to 1 - k") {
  for (long long k = -10; k <= 10; ++k) {
    const UlrichDatum v = serre_involution(ulrich_class(k));
    CHECK(v.k == 1 - k);
    CHECK(v.a == c_seq(-k));
    CHECK(v.b == c_seq(1 - k));
  }
}

TEST_CASE("ladder extensions are Ulrich initialized at 1 with h^0 = 3 rank") {
  for (long long k = 1; k <= 6; ++k) {
    const UlrichDatum u = ulrich_class(k);
    FormalSheaf sub{{{line_bundle(-1, 0),
                      static_cast<long long>(u.a)}}};
    FormalSheaf quot{{{line_bundle(1, -1),
                       static_cast<long long>(u.b)}}};
    if (u.a == 0) sub.parts.clear();
    const Sheaf s = ExtensionSheaf{sub, quot};
    const auto init = ulrich_init(s);
    REQUIRE(init.has_value());
    CHECK(*init == 1);
    const CohInterval h = coh_sheaf(s, *init);
    CHECK(h.exact());
    CHECK(h.lo[0] == 3 * sheaf_rank(s));
  }
}

TEST_CASE("pairing between neighbouring ladder classes") {
  // chi(U_1, U_0) = -3 drives the three-term recursion; further along the
  // ladder the pairing settles at +3.
  CHECK(euler_pairing(ulrich_class(1).cls, ulrich_class(0).cls) == -3);
  for (long long k = -5; k <= 5; ++k) {
    const Rat chi =
        euler_pairing(ulrich_class(k + 1).cls, ulrich_class(k).cls);
    CHECK(chi == (k == 0 ? -3 : 3));
  }
}
