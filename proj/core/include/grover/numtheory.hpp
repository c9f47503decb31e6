#pragma once

// Exact integer arithmetic behind unitary Cayley spectra.

#include <cstdint>
#include <utility>
#include <vector>

namespace grover::numtheory {

using Int = std::int64_t;

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing prime order. n = 1 yields an empty list.
std::vector<std::pair<Int, int>> factorize(Int n);

Int euler_phi(Int n);

/// Moebius function; returns -1, 0 or 1.
int mobius(Int n);

/// Reduces j into [0, n).
Int reduce_mod(Int j, Int n);

/// Ramanujan sum R(j, n) via mu(c) phi(n) / phi(c), c = n / gcd(n, j).
Int ramanujan_closed(Int j, Int n);

/// Ramanujan sum R(j, n) as the character sum over units mod n, evaluated in
/// double precision and rounded. Throws ConsistencyError if the sum is not
/// within 1e-6 of a real integer.
Int ramanujan_direct(Int j, Int n);

struct RamanujanValue {
  Int j = 0;
  Int n = 1;
  Int value = 0;

  friend bool operator==(const RamanujanValue&, const RamanujanValue&) = default;
};

/// Evaluates both routes and throws ConsistencyError if they disagree.
RamanujanValue ramanujan(Int j, Int n);

/// Units of Z_n in increasing order. n = 1 gives {0} by convention (gcd(0,1) = 1).
std::vector<Int> units(Int n);

}  // namespace grover::numtheory
