#include "segre/beilinson.hpp"

#include <sstream>
#include <stdexcept>

namespace segre {

const std::array<BuildingBlock, 6>& exceptional_collection() {
  static const std::array<BuildingBlock, 6> e = {
      line_bundle(0, -1), line_bundle(1, -1), line_bundle(-1, 0),
      line_bundle(-1, 1), omega_pi(0, 1),     line_bundle(0, 0),
  };
  return e;
}

const std::array<DualObject, 6>& dual_collection() {
  // T_pi(F) = Omega_pi(F + 3L).
  static const std::array<DualObject, 6> d = {{
      {line_bundle(0, 0), 0},
      {line_bundle(0, 1), 0},
      {line_bundle(1, 1), 1},
      {omega_pi(1, 3), 1},
      {line_bundle(1, 2), 2},
      {line_bundle(2, 2), 2},
  }};
  return d;
}

namespace {

constexpr std::array<int, 6> kShift = {0, 0, 1, 1, 2, 2};

// Column twisters of the E_1 table: a_{i,j} = h^{i - s_j}(s (x) twist_j).
constexpr std::array<DivisorClass, 6> kColumnTwist = {{
    {0, 0}, {0, -1}, {-1, -1}, {-1, 0} /* tensor Omega_pi(-F) */,
    {-1, -2}, {-2, -2},
}};

CohInterval column_cohomology(const Sheaf& s, int j) {
  if (j == 3) return coh_sheaf_tensor_omega(s, kColumnTwist[3], 0);
  return coh_sheaf(sheaf_twist(s, kColumnTwist[static_cast<size_t>(j)]), 0);
}

void check_eq(CheckReport& r, bool ok, const std::string& what) {
  if (!ok) r.failures.push_back(what);
}

}  // namespace

CheckReport dual_collection_check() {
  CheckReport rep;
  const auto& e = exceptional_collection();
  const auto& d = dual_collection();

  // (a) exceptionality of each E_i.
  for (int i = 0; i < 6; ++i) {
    const CohInterval x = ext_blocks(e[i], e[i]);
    if (x.exact()) {
      check_eq(rep, x.as_exact() == CohVector{{1, 0, 0, 0}},
               "E_" + std::to_string(i) + " not exceptional");
    } else {
      bool contains = x.lo[0] <= 1 && x.hi[0] >= 1;
      for (int q = 1; q < 4; ++q) contains = contains && x.lo[q] == 0;
      check_eq(rep,
               contains && euler_pairing(e[i].ch(), e[i].ch()) == 1,
               "E_" + std::to_string(i) + " exceptionality not certified");
    }
  }

  // (b) backward Ext vanishing where forced exact.
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < i; ++j) {
      const CohInterval x = ext_blocks(e[i], e[j]);
      if (!x.exact()) continue;
      check_eq(rep, x.as_exact() == CohVector{{0, 0, 0, 0}},
               "Ext(E_" + std::to_string(i) + ", E_" + std::to_string(j) +
                   ") != 0");
    }

  // (c) chi(^dE_i, E_j) = (-1)^i delta_{i+j,5}.
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const Rat want = i + j == 5 ? (i % 2 == 0 ? 1 : -1) : 0;
      check_eq(rep, euler_pairing(d[i].ch(), e[j].ch()) == want,
               "chi(^dE_" + std::to_string(i) + ", E_" + std::to_string(j) +
                   ") mismatch");
    }

  // (d) the Hom vanishings between collection members.
  const std::array<std::pair<int, int>, 9> nomaps = {{
      {0, 2}, {0, 3}, {1, 0}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 4},
  }};
  for (const auto& [i, j] : nomaps) {
    const CohInterval x = ext_blocks(e[i], e[j]);
    check_eq(rep, x.exact() && x.hi[0] == 0,
             "Hom(E_" + std::to_string(i) + ", E_" + std::to_string(j) +
                 ") != 0");
  }
  return rep;
}

bool BeilinsonTable::exact() const {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (lo[i][j] != hi[i][j]) return false;
  return true;
}

BeilinsonTable beilinson_table(const Sheaf& s) {
  if (sheaf_zero(s)) throw std::invalid_argument("beilinson_table: zero sheaf");
  BeilinsonTable t;
  for (int j = 0; j < 6; ++j) {
    const CohInterval col = column_cohomology(s, j);
    for (int i = 0; i < 6; ++i) {
      const int q = i - kShift[static_cast<size_t>(j)];
      if (q < 0 || q > 3) continue;  // outside the cohomological range
      t.lo[i][j] = col.lo[static_cast<size_t>(q)];
      t.hi[i][j] = col.hi[static_cast<size_t>(q)];
    }
  }
  return t;
}

std::optional<long long> normalize_twist(const Sheaf& s) {
  if (sheaf_zero(s)) throw std::invalid_argument("normalize_twist: zero sheaf");
  const TwistWindow w = coh_window(s, 0);
  if (window_empty(w)) return std::nullopt;
  // h^0 windows are up-closed: the union starts at the smallest lower bound.
  long long start = 0;
  bool have = false;
  for (const auto& x : w) {
    if (!x.lo) return std::nullopt;
    if (!have || *x.lo < start) start = *x.lo;
    have = true;
  }
  // Walk up from the first possibly-nonzero twist to the certified one.
  for (long long t = start;; ++t) {
    const CohInterval c = coh_sheaf(s, t);
    if (c.lo[0] > 0) {
      // Certified nonzero at t; need certified zero at t-1.
      if (coh_sheaf(s, t - 1).hi[0] == 0) return t - 1;
      return std::nullopt;
    }
    if (c.hi[0] != 0) return std::nullopt;  // undecided entry blocks t0
    if (t > start + 1000000)
      throw std::logic_error("normalize_twist: runaway scan");
  }
}

Classification classify(const Sheaf& s) {
  if (sheaf_zero(s)) throw std::invalid_argument("classify: zero sheaf");
  Classification out;

  const AcmResult acm = is_acm(s);
  if (!acm.acm) {
    out.kind = Classification::Kind::NotACM;
    out.witness_i = acm.witness_i;
    out.witness_t = acm.witness_t;
    return out;
  }

  const auto t0 = normalize_twist(s);
  if (!t0) {
    out.kind = Classification::Kind::Undetermined;
    out.reason = "normalizing twist undecided by interval bounds";
    return out;
  }
  out.t = *t0;
  const Sheaf n = sheaf_twist(s, {*t0, *t0});

  // Omega shortcut: a twist with h^1(n(tH - L)) != 0 identifies Omega_pi(L).
  const Sheaf shifted = sheaf_twist(n, {0, -1});
  for (const auto& x : coh_window(shifted, 1)) {
    if (!x.lo || !x.hi) continue;  // h^1 windows of blocks are bounded
    for (long long t = *x.lo; t <= *x.hi; ++t) {
      const CohInterval c = coh_sheaf(shifted, t);
      if (c.lo[1] > 0) {
        out.kind = Classification::Kind::OmegaPiTwist;
        out.t = *t0 + t;
        return out;
      }
      if (c.hi[1] > 0) {
        out.kind = Classification::Kind::Undetermined;
        out.reason = "h^1(s(tH-L)) undecided by interval bounds";
        return out;
      }
    }
  }

  const BeilinsonTable table = beilinson_table(n);
  bool only_ulrich_entries = true;
  for (int i = 0; i < 6 && only_ulrich_entries; ++i)
    for (int j = 0; j < 6; ++j) {
      if ((i == 3 && j == 3) || (i == 4 && j == 4)) continue;
      if (table.hi[i][j] == 0) continue;  // certified zero
      if (table.lo[i][j] > 0) {
        only_ulrich_entries = false;
        break;
      }
      out.kind = Classification::Kind::Undetermined;
      std::ostringstream os;
      os << "table entry a_{" << i << "," << j << "} undecided";
      out.reason = os.str();
      return out;
    }
  if (only_ulrich_entries) {
    if (!table.exact_entry(3, 3) || !table.exact_entry(4, 4)) {
      out.kind = Classification::Kind::Undetermined;
      out.reason = "Ulrich multiplicities undecided";
      return out;
    }
    out.kind = Classification::Kind::Ulrich;
    out.a = table.lo[3][3];
    out.b = table.lo[4][4];
    return out;
  }

  const CohInterval h0L = coh_sheaf(sheaf_twist(n, {0, 1}), 0);
  if (h0L.lo[0] > 0) {
    out.kind = Classification::Kind::LTwist;
  } else if (h0L.hi[0] == 0) {
    out.kind = Classification::Kind::StructureTwist;
  } else {
    out.kind = Classification::Kind::Undetermined;
    out.reason = "h^0(s(L)) undecided by interval bounds";
  }
  return out;
}

std::vector<std::array<long long, 3>> enumerate_acm_types(
    const HilbertPolynomial& p) {
  std::vector<std::array<long long, 3>> out;
  const Rat rank = p.c[3] * 2;  // leading coefficient is r/2
  if (rank <= 0 || denominator(rank) != 1) return out;
  const long long r = static_cast<long long>(numerator(rank));
  const HilbertPolynomial p1 = hilbert_poly(ch_line({-1, 0}));
  const HilbertPolynomial p2 = hilbert_poly(ch_line({1, -1}));
  const HilbertPolynomial p3 = hilbert_poly(ch_omega_pi({0, 1}));
  for (long long c = 0; 2 * c <= r; ++c)
    for (long long b = 0; b + 2 * c <= r; ++b) {
      const long long a = r - b - 2 * c;
      if (p1 * Rat(a) + p2 * Rat(b) + p3 * Rat(c) == p)
        out.push_back({a, b, c});
    }
  return out;
}

}  // namespace segre
