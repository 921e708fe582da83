#pragma once

// Arbitrary-precision integer primitives: roots, perfect-power tests,
// primality, factorization and square-free decomposition. Everything here is
// exact; no floating point is used anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace diopell {

// All integer quantities in the toolkit are arbitrary precision. Values are
// non-negative by convention; operations check this at their boundaries.
using Natural = mpz_class;

struct PrimePower {
    Natural prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factors in strictly ascending order. Multiplying them back yields the
// factored value exactly.
struct Factorization {
    std::vector<PrimePower> factors;

    Natural value() const;
};

// n = d * w^2 with d square-free.
struct SquarefreeDecomposition {
    Natural d;
    Natural w;
};

// Floor square root: r with r^2 <= n < (r+1)^2. Newton iteration; the
// postcondition is re-checked before returning.
Natural isqrt(const Natural& n);

// The root r if n = r^2, absent otherwise.
std::optional<Natural> is_perfect_square(const Natural& n);

// Floor k-th root: r with r^k <= n < (r+1)^k. k >= 1.
Natural iroot(const Natural& n, unsigned k);

// The root r if n = r^k exactly, absent otherwise.
std::optional<Natural> is_perfect_power(const Natural& n, unsigned k);

// Exact below 2^64 (fixed deterministic witness set). Above, 12 fixed plus 40
// derived strong probable-prime rounds plus a strong Lucas round.
bool is_prime(const Natural& n);

// Trial division by primes <= 10^5, then Pollard rho (Brent variant) on the
// remaining cofactors. n >= 2; re-multiplication is checked before returning.
Factorization factorize(const Natural& n);

// n >= 1.
SquarefreeDecomposition squarefree_decompose(const Natural& n);

// Primes <= 10^5 in ascending order, sieved once per process.
const std::vector<uint32_t>& small_primes();

}  // namespace diopell
