#include "grover/numtheory.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "grover/errors.hpp"

namespace grover::numtheory {
namespace {

void require_positive(Int n, const char* what) {
  if (n < 1) {
    throw DomainError(std::string(what) + ": modulus must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
  require_positive(n, "factorize");
  std::vector<std::pair<Int, int>> factors;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

Int euler_phi(Int n) {
  require_positive(n, "euler_phi");
  Int result = n;
  for (const auto& [p, e] : factorize(n)) {
    result = result / p * (p - 1);
  }
  return result;
}

int mobius(Int n) {
  require_positive(n, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

Int reduce_mod(Int j, Int n) {
  require_positive(n, "reduce_mod");
  Int r = j % n;
  return r < 0 ? r + n : r;
}

Int ramanujan_closed(Int j, Int n) {
  require_positive(n, "ramanujan_closed");
  const Int jr = reduce_mod(j, n);
  const Int c = n / std::gcd(n, jr);  // gcd(n, 0) = n, so c = 1 at j = 0
  const Int phi_n = euler_phi(n);
  const Int phi_c = euler_phi(c);
  if (phi_n % phi_c != 0) {
    throw ConsistencyError("ramanujan_closed: phi(" + std::to_string(c) + ") does not divide phi(" +
                           std::to_string(n) + ")");
  }
  return mobius(c) * (phi_n / phi_c);
}

Int ramanujan_direct(Int j, Int n) {
  require_positive(n, "ramanujan_direct");
  const Int jr = reduce_mod(j, n);
  double re = 0.0;
  double im = 0.0;
  for (Int r = 0; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    // (j r) mod n keeps the angle argument small and exact.
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((jr * r) % n) /
                         static_cast<double>(n);
    re += std::cos(angle);
    im += std::sin(angle);
  }
  const double rounded = std::round(re);
  if (std::abs(im) >= 1e-6 || std::abs(re - rounded) >= 1e-6) {
    throw ConsistencyError("ramanujan_direct: R(" + std::to_string(j) + "," + std::to_string(n) +
                           ") is not a real integer (re=" + std::to_string(re) +
                           ", im=" + std::to_string(im) + ")");
  }
  return static_cast<Int>(rounded);
}

RamanujanValue ramanujan(Int j, Int n) {
  const Int closed = ramanujan_closed(j, n);
  const Int direct = ramanujan_direct(j, n);
  if (closed != direct) {
    throw ConsistencyError("ramanujan: closed form " + std::to_string(closed) +
                           " != character sum " + std::to_string(direct) + " at (" +
                           std::to_string(j) + "," + std::to_string(n) + ")");
  }
  return {reduce_mod(j, n), n, closed};
}

std::vector<Int> units(Int n) {
  require_positive(n, "units");
  std::vector<Int> out;
  for (Int a = 0; a < n; ++a) {
    if (std::gcd(a, n) == 1) out.push_back(a);
  }
  return out;
}

}  // namespace grover::numtheory
