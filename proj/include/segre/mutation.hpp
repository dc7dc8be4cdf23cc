#pragma once

#include "segre/chow.hpp"

// Fibonacci-type sequences, numerical mutations, and the rigid Ulrich
// classes U_k on X = P^1 x P^2, with the Serre-duality involution
// k -> 1 - k.

namespace segre {

// c_0 = 0, c_1 = 1, c_{k+2} = 3 c_{k+1} - c_k, extended by c_{-k} = c_k.
// These are the odd-index Fibonacci numbers.
Int c_seq(long long k);

// a_{l,0} = 0, a_{l,1} = 1, a_{l,k+2} = l a_{l,k+1} - a_{l,k}; requires
// l >= 2 (strictly increasing from k = 1 on).
Int a_seq(long long ell, long long k);

// U_k sits in 0 -> O(-F)^a -> U_k -> O(F-L)^b -> 0 with
// (a, b) = (c_{k-1}, c_k); U_0 = O(-F), U_1 = O(F-L).
struct UlrichDatum {
  long long k = 0;
  Int a;
  Int b;
  Int rank;
  ChernCharacter cls;
};

UlrichDatum ulrich_class(long long k);

// Numerical shadow of the mutation triangles: chi(e, f) e - f, with the
// sign normalized so generated multiplicities stay non-negative.
ChernCharacter left_mutation_class(const ChernCharacter& e,
                                   const ChernCharacter& f);
ChernCharacter right_mutation_class(const ChernCharacter& e,
                                    const ChernCharacter& f);

// chi(u, u) = 1, the numerical shadow of rigidity.
bool is_numerically_rigid(const UlrichDatum& u);

// U_k -> U_{1-k}, via dual(cls) * ch(O(-L)); throws if the transformed
// class fails to match ulrich_class(1 - k).
UlrichDatum serre_involution(const UlrichDatum& u);

}  // namespace segre
