#pragma once

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "segre/chow.hpp"

// Exact cohomology of building-block sheaves on X = P^1 x P^2 via
// Kunneth, twist-window analysis, ACM/Ulrich predicates and Ext groups
// between blocks.
//
// Everything underdetermined by a long exact sequence is reported as an
// interval with per-degree bounds; a value is exact when the bounds meet.

namespace segre {

enum class BlockKind { LineBundle, OmegaPi };

// O_X(aF + bL) or Omega_pi(aF + bL).
struct BuildingBlock {
  BlockKind kind = BlockKind::LineBundle;
  DivisorClass d;

  long long rank() const { return kind == BlockKind::LineBundle ? 1 : 2; }
  ChernCharacter ch() const;
  BuildingBlock twist(DivisorClass e) const { return {kind, d + e}; }
  bool operator==(const BuildingBlock&) const = default;
};

inline BuildingBlock line_bundle(long long a, long long b) {
  return {BlockKind::LineBundle, {a, b}};
}
inline BuildingBlock omega_pi(long long a, long long b) {
  return {BlockKind::OmegaPi, {a, b}};
}

// Finite formal direct sum of blocks with positive multiplicities.
struct FormalSheaf {
  std::vector<std::pair<BuildingBlock, long long>> parts;

  bool zero() const { return parts.empty(); }
  long long rank() const;
  ChernCharacter ch() const;
  FormalSheaf twist(DivisorClass e) const;
  bool operator==(const FormalSheaf&) const = default;
};

// Any sheaf E fitting 0 -> sub -> E -> quot -> 0.
struct ExtensionSheaf {
  FormalSheaf sub;
  FormalSheaf quot;

  bool zero() const { return sub.zero() && quot.zero(); }
  long long rank() const { return sub.rank() + quot.rank(); }
  ChernCharacter ch() const { return sub.ch() + quot.ch(); }
  ExtensionSheaf twist(DivisorClass e) const {
    return {sub.twist(e), quot.twist(e)};
  }
  bool operator==(const ExtensionSheaf&) const = default;
};

using Sheaf = std::variant<FormalSheaf, ExtensionSheaf>;

bool sheaf_zero(const Sheaf& s);
long long sheaf_rank(const Sheaf& s);
ChernCharacter sheaf_ch(const Sheaf& s);
Sheaf sheaf_twist(const Sheaf& s, DivisorClass e);

// Exact per-degree dimensions (h^0, h^1, h^2, h^3).
struct CohVector {
  std::array<long long, 4> h{};

  Rat chi() const;
  bool operator==(const CohVector&) const = default;
};

// Per-degree bounds lo <= hi; exact when they meet everywhere.
struct CohInterval {
  std::array<long long, 4> lo{};
  std::array<long long, 4> hi{};

  bool exact() const { return lo == hi; }
  static CohInterval of(const CohVector& v) { return {v.h, v.h}; }
  CohInterval operator+(const CohInterval& o) const;
  CohVector as_exact() const;  // requires exact()
};

// P^1: h^0, h^1 of O(a).
std::pair<long long, long long> coh_p1(long long a);
// P^2: h^0, h^1, h^2 of O(b).
std::array<long long, 3> coh_p2_line(long long b);
// P^2: h^0, h^1, h^2 of Omega(b).
std::array<long long, 3> coh_p2_omega(long long b);

// Kunneth cohomology of a block twisted by tH.
CohVector coh_block(const BuildingBlock& b, long long t);
CohVector coh_formal(const FormalSheaf& s, long long t);  // throws on zero sheaf
CohInterval coh_extension(const ExtensionSheaf& e, long long t);
CohInterval coh_sheaf(const Sheaf& s, long long t);

// Interval bounds for the middle term of 0 -> sub -> E -> quot -> 0 from
// bounds on the ends; connecting maps H^i(quot) -> H^{i+1}(sub) of unknown
// rank.
CohInterval extension_interval(const CohInterval& sub, const CohInterval& quot);

// h^i of (block tensor Omega_pi(e))(tH). Exact for line-bundle blocks;
// interval for OmegaPi blocks (resolved through the relative Euler
// sequence).
CohInterval coh_block_tensor_omega(const BuildingBlock& b, DivisorClass e,
                                   long long t);
CohInterval coh_sheaf_tensor_omega(const Sheaf& s, DivisorClass e, long long t);

// An integer interval of twists; absent bound = unbounded on that side.
struct TwistInterval {
  std::optional<long long> lo;
  std::optional<long long> hi;
  bool operator==(const TwistInterval&) const = default;
};

// Normalized finite union: sorted, disjoint, non-adjacent.
using TwistWindow = std::vector<TwistInterval>;

TwistWindow normalize_window(TwistWindow w);
bool window_empty(const TwistWindow& w);
bool window_contains(const TwistWindow& w, long long t);
bool window_finite(const TwistWindow& w);
// All t in a finite window, ascending.
std::vector<long long> window_points(const TwistWindow& w);
TwistWindow window_union(const TwistWindow& x, const TwistWindow& y);
TwistWindow window_intersect(const TwistWindow& x, const TwistWindow& y);

// Twists t for which h^i(block(t)) is nonzero (exact for blocks).
TwistWindow coh_window_block(const BuildingBlock& b, int i);
// Sound windows for sums and extensions (complete for formal sums).
TwistWindow coh_window(const Sheaf& s, int i);

struct AcmResult {
  bool acm = true;
  int witness_i = 0;        // valid when !acm
  long long witness_t = 0;  // valid when !acm
};

// Intermediate cohomology vanishes in every twist (degrees 1 and 2).
AcmResult is_acm(const Sheaf& s);  // throws on zero sheaf

// The unique t with H^*(s(t - j)) = 0 for j = 1,2,3, if any.
std::optional<long long> ulrich_init(const Sheaf& s);  // throws on zero sheaf

// Ext^i_X(A, B) for building blocks; interval only when both are OmegaPi.
CohInterval ext_blocks(const BuildingBlock& a, const BuildingBlock& b);

}  // namespace segre
