#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "segre/cohomology.hpp"

// The fixed exceptional collection on X = P^1 x P^2, its left dual,
// the E_1 table of the Beilinson-type spectral sequence, and the
// classifier for ACM inputs.

namespace segre {

// A dual-collection object: a bundle with a homological shift.
struct DualObject {
  BuildingBlock bundle;
  int shift = 0;

  ChernCharacter ch() const {
    const ChernCharacter u = bundle.ch();
    return shift % 2 == 0 ? u : -u;
  }
};

// E_. = (O(-L), O(F-L), O(-F), O(L-F), Omega_pi(L), O)
const std::array<BuildingBlock, 6>& exceptional_collection();
// Left dual (O, O(L), O(1)[1], T_pi(F)[1], O(F+2L)[2], O(2)[2])
const std::array<DualObject, 6>& dual_collection();

struct CheckReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Verifies exceptionality, backward Ext vanishing where the LES forces
// exact values, the chi-duality chi(^dE_i, E_j) = (-1)^i delta_{i+j,5},
// and the Hom vanishings between collection members.
CheckReport dual_collection_check();

struct BeilinsonTable {
  // a[i][j] bounds; row i = Ext degree, column j = dual object index.
  std::array<std::array<long long, 6>, 6> lo{};
  std::array<std::array<long long, 6>, 6> hi{};

  bool exact_entry(int i, int j) const { return lo[i][j] == hi[i][j]; }
  bool exact() const;
  // b_{i,j} = a_{5-i,5-j}, the orientation the tables are usually
  // displayed in.
  long long b_lo(int i, int j) const { return lo[5 - i][5 - j]; }
  long long b_hi(int i, int j) const { return hi[5 - i][5 - j]; }
};

// a_{i,j} = dim Ext^i(^dE_j, s) = h^{i - s_j} of s twisted per column.
BeilinsonTable beilinson_table(const Sheaf& s);  // throws on zero sheaf

// The unique t0 with h^0(s(t0)) = 0 and h^0(s(t0+1)) != 0, when the
// interval bounds decide it.
std::optional<long long> normalize_twist(const Sheaf& s);

struct Classification {
  enum class Kind {
    OmegaPiTwist,
    StructureTwist,
    LTwist,
    Ulrich,
    NotACM,
    NotNormalizable,
    Undetermined,
  };
  Kind kind = Kind::Undetermined;
  long long t = 0;          // normalizing twist (all but NotACM/Undetermined)
  long long a = 0, b = 0;   // Ulrich multiplicities
  int witness_i = 0;        // NotACM
  long long witness_t = 0;  // NotACM
  std::string reason;       // Undetermined
};

// Case analysis of an ACM input against the known indecomposable types;
// indecomposability is an input assumption, not checked.
Classification classify(const Sheaf& s);  // throws on zero sheaf

// All (a, b, c) in N^3 with
// a [O(-F)] + b [O(F-L)] + c [Omega_pi(L)] matching the given Hilbert
// polynomial. Always a finite list.
std::vector<std::array<long long, 3>> enumerate_acm_types(
    const HilbertPolynomial& p);

}  // namespace segre
