#pragma once

// Independent brute-force oracles for property tests and reproducible
// pseudo-random instance generators.

#include <cstdint>
#include <optional>

#include "rxy/classify.hpp"

namespace rxy {

// all P over Z/nZ of degree <= degcap admitting a compositional inverse of
// degree <= 2*bitlength(n); 2 <= n <= 12, degcap <= 3
std::vector<PolyR> brute_va1(long n, int degcap);

// least-degree S with S(Q(y)) = y mod n, found by exhausting the linear
// system over Z/nZ (the unknown coefficients of S enter linearly); nullopt
// when no inverse of degree <= degcap exists
std::optional<PolyR> brute_comp_inverse(const PolyR& Q, long n, int degcap);

// reproducible generators (fixed engine, documented bounds)
Rl2Data random_rl2(Ring r, std::uint64_t seed);
Quadruplet random_quadruplet(Ring r, std::uint64_t seed);
// an equivalent quadruplet obtained by random unit/shift/scale/constant moves
Quadruplet perturb_equivalent(const Quadruplet& q, std::uint64_t seed);
// alternating triangular/swap word ending in an identity affine tail,
// `length` factors in total, coefficient z-degrees <= 3
Word random_word(Ring r, std::uint64_t seed, int length);

}  // namespace rxy
