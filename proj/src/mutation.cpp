#include "segre/mutation.hpp"

#include <stdexcept>
#include <utility>

namespace segre {

Int c_seq(long long k) {
  if (k < 0) k = -k;
  Int prev = 0, cur = 1;  // c_0, c_1
  if (k == 0) return prev;
  for (long long i = 1; i < k; ++i) {
    Int next = 3 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Int a_seq(long long ell, long long k) {
  if (ell < 2) throw std::invalid_argument("a_seq: ell must be >= 2");
  if (k < 0) throw std::invalid_argument("a_seq: k must be >= 0");
  Int prev = 0, cur = 1;
  if (k == 0) return prev;
  for (long long i = 1; i < k; ++i) {
    Int next = ell * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UlrichDatum ulrich_class(long long k) {
  UlrichDatum u;
  u.k = k;
  u.a = c_seq(k - 1);
  u.b = c_seq(k);
  u.rank = u.a + u.b;
  u.cls = ch_line({-1, 0}) * Rat(u.a) + ch_line({1, -1}) * Rat(u.b);
  return u;
}

namespace {

ChernCharacter sign_normalize(ChernCharacter v) {
  if (v.r < 0) return -v;
  if (v.r == 0 && (v.f < 0 || (v.f == 0 && v.l < 0))) return -v;
  return v;
}

}  // namespace

ChernCharacter left_mutation_class(const ChernCharacter& e,
                                   const ChernCharacter& f) {
  return sign_normalize(e * euler_pairing(e, f) - f);
}

ChernCharacter right_mutation_class(const ChernCharacter& e,
                                    const ChernCharacter& f) {
  return sign_normalize(e * euler_pairing(f, e) - f);
}

bool is_numerically_rigid(const UlrichDatum& u) {
  return euler_pairing(u.cls, u.cls) == 1;
}

UlrichDatum serre_involution(const UlrichDatum& u) {
  // omega_X(2) = O(-L), so the class goes to dual(cls) * ch(O(-L)).
  const ChernCharacter image = dualize(u.cls) * ch_line({0, -1});
  UlrichDatum v = ulrich_class(1 - u.k);
  if (v.cls != image)
    throw std::logic_error("serre_involution: class mismatch");
  return v;
}

}  // namespace segre
