#include "segre/cohomology.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace segre {

ChernCharacter BuildingBlock::ch() const {
  return kind == BlockKind::LineBundle ? ch_line(d) : ch_omega_pi(d);
}

long long FormalSheaf::rank() const {
  long long r = 0;
  for (const auto& [b, m] : parts) r += b.rank() * m;
  return r;
}

ChernCharacter FormalSheaf::ch() const {
  ChernCharacter u{};
  for (const auto& [b, m] : parts) u = u + b.ch() * Rat(m);
  return u;
}

FormalSheaf FormalSheaf::twist(DivisorClass e) const {
  FormalSheaf s;
  s.parts.reserve(parts.size());
  for (const auto& [b, m] : parts) s.parts.emplace_back(b.twist(e), m);
  return s;
}

bool sheaf_zero(const Sheaf& s) {
  return std::visit([](const auto& x) { return x.zero(); }, s);
}

long long sheaf_rank(const Sheaf& s) {
  return std::visit([](const auto& x) { return x.rank(); }, s);
}

ChernCharacter sheaf_ch(const Sheaf& s) {
  return std::visit([](const auto& x) { return x.ch(); }, s);
}

Sheaf sheaf_twist(const Sheaf& s, DivisorClass e) {
  return std::visit([&](const auto& x) { return Sheaf{x.twist(e)}; }, s);
}

Rat CohVector::chi() const { return Rat(h[0] - h[1] + h[2] - h[3]); }

CohInterval CohInterval::operator+(const CohInterval& o) const {
  CohInterval s;
  for (int i = 0; i < 4; ++i) {
    s.lo[i] = lo[i] + o.lo[i];
    s.hi[i] = hi[i] + o.hi[i];
  }
  return s;
}

CohVector CohInterval::as_exact() const {
  if (!exact()) throw std::logic_error("CohInterval::as_exact on inexact value");
  return CohVector{lo};
}

std::pair<long long, long long> coh_p1(long long a) {
  return {std::max(a + 1, 0LL), std::max(-a - 1, 0LL)};
}

std::array<long long, 3> coh_p2_line(long long b) {
  std::array<long long, 3> h{};
  if (b >= 0) h[0] = static_cast<long long>(binomial(b + 2, 2));
  if (b <= -3) h[2] = static_cast<long long>(binomial(-b - 1, 2));
  return h;
}

std::array<long long, 3> coh_p2_omega(long long b) {
  std::array<long long, 3> h{};
  if (b >= 2) h[0] = b * b - 1;
  if (b == 0) h[1] = 1;
  if (b <= -2) h[2] = b * b - 1;
  return h;
}

CohVector coh_block(const BuildingBlock& b, long long t) {
  const auto [p0, p1] = coh_p1(b.d.a + t);
  const auto q = b.kind == BlockKind::LineBundle ? coh_p2_line(b.d.b + t)
                                                 : coh_p2_omega(b.d.b + t);
  CohVector v;
  v.h[0] = p0 * q[0];
  v.h[1] = p0 * q[1] + p1 * q[0];
  v.h[2] = p0 * q[2] + p1 * q[1];
  v.h[3] = p1 * q[2];
  return v;
}

CohVector coh_formal(const FormalSheaf& s, long long t) {
  if (s.zero()) throw std::invalid_argument("coh_formal: zero sheaf");
  CohVector v;
  for (const auto& [b, m] : s.parts) {
    const CohVector w = coh_block(b, t);
    for (int i = 0; i < 4; ++i) v.h[i] += w.h[i] * m;
  }
  return v;
}

CohInterval extension_interval(const CohInterval& s, const CohInterval& q) {
  // LES ... -> H^i(sub) -> H^i(E) -> H^i(quot) -(delta_i)-> H^{i+1}(sub) -> ...
  // h^i(E) = (s_i - r_{i-1}) + (q_i - r_i) with r_i = rank(delta_i).
  CohInterval e;
  for (int i = 0; i < 4; ++i) {
    const long long qprev_hi = i > 0 ? q.hi[i - 1] : 0;
    const long long snext_hi = i < 3 ? s.hi[i + 1] : 0;
    e.lo[i] = std::max(s.lo[i] - qprev_hi, 0LL) +
              std::max(q.lo[i] - snext_hi, 0LL);
    e.hi[i] = s.hi[i] + q.hi[i];
  }
  return e;
}

CohInterval coh_extension(const ExtensionSheaf& e, long long t) {
  if (e.zero()) throw std::invalid_argument("coh_extension: zero sheaf");
  if (e.sub.zero()) return CohInterval::of(coh_formal(e.quot, t));
  if (e.quot.zero()) return CohInterval::of(coh_formal(e.sub, t));
  return extension_interval(CohInterval::of(coh_formal(e.sub, t)),
                            CohInterval::of(coh_formal(e.quot, t)));
}

CohInterval coh_sheaf(const Sheaf& s, long long t) {
  if (std::holds_alternative<FormalSheaf>(s))
    return CohInterval::of(coh_formal(std::get<FormalSheaf>(s), t));
  return coh_extension(std::get<ExtensionSheaf>(s), t);
}

namespace {

// Bounds for the cokernel/kernel pieces of H^i cut out of the sequence
// 0 -> A -> B -> C -> 0 by maps H^i(A) -> H^i(B) of unknown rank.
CohInterval quotient_of_sequence(const std::array<long long, 4>& a,
                                 const std::array<long long, 4>& b) {
  CohInterval c;
  for (int i = 0; i < 4; ++i) {
    const long long anext = i < 3 ? a[i + 1] : 0;
    const long long bnext = i < 3 ? b[i + 1] : 0;
    c.lo[i] = std::max(b[i] - a[i], 0LL) + std::max(anext - bnext, 0LL);
    c.hi[i] = b[i] + anext;
  }
  return c;
}

}  // namespace

CohInterval coh_block_tensor_omega(const BuildingBlock& b, DivisorClass e,
                                   long long t) {
  if (b.kind == BlockKind::LineBundle)
    return CohInterval::of(coh_block(omega_pi(b.d.a + e.a, b.d.b + e.b), t));
  // Omega_pi(D) (x) Omega_pi(e): resolve the left factor through
  // 0 -> O(D - 3L) -> O(D - 2L)^3 -> Omega_pi(D) -> 0.
  const DivisorClass base = b.d + e;
  const CohVector sub = coh_block(omega_pi(base.a, base.b - 3), t);
  CohVector mid = coh_block(omega_pi(base.a, base.b - 2), t);
  for (auto& x : mid.h) x *= 3;
  return quotient_of_sequence(sub.h, mid.h);
}

CohInterval coh_sheaf_tensor_omega(const Sheaf& s, DivisorClass e, long long t) {
  if (sheaf_zero(s))
    throw std::invalid_argument("coh_sheaf_tensor_omega: zero sheaf");
  const auto formal = [&](const FormalSheaf& fs) {
    CohInterval v{};
    for (const auto& [blk, m] : fs.parts) {
      const CohInterval w = coh_block_tensor_omega(blk, e, t);
      for (int i = 0; i < 4; ++i) {
        v.lo[i] += w.lo[i] * m;
        v.hi[i] += w.hi[i] * m;
      }
    }
    return v;
  };
  if (std::holds_alternative<FormalSheaf>(s))
    return formal(std::get<FormalSheaf>(s));
  const auto& ext = std::get<ExtensionSheaf>(s);
  if (ext.sub.zero()) return formal(ext.quot);
  if (ext.quot.zero()) return formal(ext.sub);
  return extension_interval(formal(ext.sub), formal(ext.quot));
}

// --- twist windows ------------------------------------------------------

namespace {

constexpr long long kNone = std::numeric_limits<long long>::min();

TwistInterval iv(std::optional<long long> lo, std::optional<long long> hi) {
  return {lo, hi};
}

bool interval_empty(const TwistInterval& x) {
  return x.lo && x.hi && *x.lo > *x.hi;
}

}  // namespace

TwistWindow normalize_window(TwistWindow w) {
  TwistWindow v;
  for (auto& x : w)
    if (!interval_empty(x)) v.push_back(x);
  std::sort(v.begin(), v.end(), [](const TwistInterval& x, const TwistInterval& y) {
    const long long xl = x.lo ? *x.lo : kNone;
    const long long yl = y.lo ? *y.lo : kNone;
    return xl < yl;
  });
  TwistWindow out;
  for (const auto& x : v) {
    if (!out.empty()) {
      TwistInterval& last = out.back();
      const bool overlaps =
          !last.hi || (x.lo && *x.lo <= *last.hi + 1) || !x.lo;
      if (overlaps) {
        if (!last.hi || !x.hi) last.hi = std::nullopt;
        else last.hi = std::max(*last.hi, *x.hi);
        continue;
      }
    }
    out.push_back(x);
  }
  return out;
}

bool window_empty(const TwistWindow& w) { return w.empty(); }

bool window_contains(const TwistWindow& w, long long t) {
  for (const auto& x : w)
    if ((!x.lo || *x.lo <= t) && (!x.hi || t <= *x.hi)) return true;
  return false;
}

bool window_finite(const TwistWindow& w) {
  for (const auto& x : w)
    if (!x.lo || !x.hi) return false;
  return true;
}

std::vector<long long> window_points(const TwistWindow& w) {
  if (!window_finite(w))
    throw std::invalid_argument("window_points: unbounded window");
  std::vector<long long> pts;
  for (const auto& x : w)
    for (long long t = *x.lo; t <= *x.hi; ++t) pts.push_back(t);
  std::sort(pts.begin(), pts.end());
  return pts;
}

TwistWindow window_union(const TwistWindow& x, const TwistWindow& y) {
  TwistWindow w = x;
  w.insert(w.end(), y.begin(), y.end());
  return normalize_window(std::move(w));
}

TwistWindow window_intersect(const TwistWindow& x, const TwistWindow& y) {
  TwistWindow w;
  for (const auto& a : x)
    for (const auto& b : y) {
      TwistInterval c;
      if (a.lo && b.lo) c.lo = std::max(*a.lo, *b.lo);
      else c.lo = a.lo ? a.lo : b.lo;
      if (a.hi && b.hi) c.hi = std::min(*a.hi, *b.hi);
      else c.hi = a.hi ? a.hi : b.hi;
      w.push_back(c);
    }
  return normalize_window(std::move(w));
}

TwistWindow coh_window_block(const BuildingBlock& blk, int i) {
  const long long a = blk.d.a, b = blk.d.b;
  TwistWindow w;
  if (blk.kind == BlockKind::LineBundle) {
    switch (i) {
      case 0: w.push_back(iv(std::max(-a, -b), std::nullopt)); break;
      case 1: w.push_back(iv(-b, -a - 2)); break;
      case 2: w.push_back(iv(-a, -b - 3)); break;
      case 3: w.push_back(iv(std::nullopt, std::min(-a - 2, -b - 3))); break;
      default: throw std::invalid_argument("coh_window_block: bad degree");
    }
  } else {
    // P^2 factor Omega(b + t): h^0 iff b+t >= 2, h^1 iff b+t = 0,
    // h^2 iff b+t <= -2.
    switch (i) {
      case 0: w.push_back(iv(std::max(-a, 2 - b), std::nullopt)); break;
      case 1:
        if (-b >= -a) w.push_back(iv(-b, -b));
        w.push_back(iv(2 - b, -a - 2));
        break;
      case 2:
        if (-b <= -a - 2) w.push_back(iv(-b, -b));
        w.push_back(iv(-a, -b - 2));
        break;
      case 3: w.push_back(iv(std::nullopt, std::min(-a - 2, -b - 2))); break;
      default: throw std::invalid_argument("coh_window_block: bad degree");
    }
  }
  return normalize_window(std::move(w));
}

TwistWindow coh_window(const Sheaf& s, int i) {
  TwistWindow w;
  const auto add = [&](const FormalSheaf& fs) {
    for (const auto& [blk, m] : fs.parts)
      w = window_union(w, coh_window_block(blk, i));
  };
  if (std::holds_alternative<FormalSheaf>(s)) {
    add(std::get<FormalSheaf>(s));
  } else {
    add(std::get<ExtensionSheaf>(s).sub);
    add(std::get<ExtensionSheaf>(s).quot);
  }
  return w;
}

AcmResult is_acm(const Sheaf& s) {
  if (sheaf_zero(s)) throw std::invalid_argument("is_acm: zero sheaf");
  for (int i = 1; i <= 2; ++i) {
    const TwistWindow w = coh_window(s, i);
    if (window_empty(w)) continue;
    // Intermediate windows of every block are bounded, so this is finite.
    for (long long t : window_points(w)) {
      if (coh_sheaf(s, t).hi[i] > 0) return {false, i, t};
    }
  }
  return {};
}

std::optional<long long> ulrich_init(const Sheaf& s) {
  if (sheaf_zero(s)) throw std::invalid_argument("ulrich_init: zero sheaf");
  long long mn = 0, mx = 0;
  for (int i = 0; i < 4; ++i)
    for (const auto& x : coh_window(s, i)) {
      if (x.lo) { mn = std::min(mn, *x.lo); mx = std::max(mx, *x.lo); }
      if (x.hi) { mn = std::min(mn, *x.hi); mx = std::max(mx, *x.hi); }
    }
  // Outside this padded window either h^0(s(t-1)) or h^3(s(t-3)) is nonzero.
  for (long long t = mn - 5; t <= mx + 5; ++t) {
    bool ok = true;
    for (long long j = 1; j <= 3 && ok; ++j) {
      const CohInterval c = coh_sheaf(s, t - j);
      for (int i = 0; i < 4; ++i)
        if (c.hi[i] != 0) { ok = false; break; }
    }
    if (ok) return t;
  }
  return std::nullopt;
}

CohInterval ext_blocks(const BuildingBlock& a, const BuildingBlock& b) {
  const DivisorClass d = b.d - a.d;
  if (a.kind == BlockKind::LineBundle) {
    const BuildingBlock h = b.kind == BlockKind::LineBundle
                                ? line_bundle(d.a, d.b)
                                : omega_pi(d.a, d.b);
    return CohInterval::of(coh_block(h, 0));
  }
  if (b.kind == BlockKind::LineBundle)
    return CohInterval::of(coh_block(omega_pi(d.a, d.b + 3), 0));
  // Omega against Omega: apply Hom(-, Omega_pi(D')) to the resolution
  // 0 -> O(D - 3L) -> O(D - 2L)^3 -> Omega_pi(D) -> 0 of the left argument.
  CohVector mid = coh_block(omega_pi(d.a, d.b + 2), 0);
  for (auto& x : mid.h) x *= 3;
  const CohVector tail = coh_block(omega_pi(d.a, d.b + 3), 0);
  // 0 -> E^0 -> M_0 -> T_0 -> E^1 -> M_1 -> T_1 -> ...
  CohInterval e;
  for (int i = 0; i < 4; ++i) {
    const long long tprev = i > 0 ? tail.h[i - 1] : 0;
    const long long mprev = i > 0 ? mid.h[i - 1] : 0;
    e.lo[i] = std::max(tprev - mprev, 0LL) + std::max(mid.h[i] - tail.h[i], 0LL);
    e.hi[i] = tprev + mid.h[i];
  }
  return e;
}

}  // namespace segre
