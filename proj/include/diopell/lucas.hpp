#pragma once

// Divisibility laws of the Pell u-sequence and primitive divisors of the
// v-sequence (Carmichael's theorem at desk scale).

#include <string>
#include <vector>

#include "diopell/arith.hpp"

namespace diopell::lucas {

enum class LemmaId { L1P1, L1P2, L1P3, L3, CARMICHAEL };

const char* lemma_name(LemmaId id);

// A falsified property at (d, k). detail names the offending prime or parity.
struct LemmaViolation {
    LemmaId lemma_id;
    Natural d;
    unsigned k;
    std::string detail;
};

// Primes dividing v_n but no v_m with m < n, ascending.
struct PrimitiveDivisorSet {
    Natural d;
    unsigned n;
    std::vector<Natural> primes;
};

// Checks, for k = 1..k_max:
//   (1) even k: every prime factor p of u_k has p = +-1 (mod 8);
//   (2) odd k:  u1 | u_k and u_k / u1 is odd;
//   (3) q in {2,3,5}: q | u_k implies q | u1.
// Empty result means all three hold over the range.
//
// For (1), u_k is factored fully while it stays small. Beyond that, small
// factors are pulled by trial division and checked individually, and the
// remaining cofactor C is certified at once: r = 2*u_{k/2} satisfies
// r^2 = 2 (mod C), so 2 is a quadratic residue mod every prime of C, which
// forces p = +-1 (mod 8). The certificate is verified, not assumed.
std::vector<LemmaViolation> check_lemma1(const Natural& d, unsigned k_max);

// Parity law: when both parities occur among u_1..u_{k_max}, every even u_k
// sits at an odd index and every odd u_k at an even index. Vacuously empty
// when the window has a single parity.
std::vector<LemmaViolation> check_lemma3(const Natural& d, unsigned k_max);

// Exact set, by full factorization of v_n plus direct divisibility scans
// against v_1..v_{n-1}. Every returned prime is re-verified by division.
// Intended for desk-scale (d, n); see has_primitive_divisor for the
// factorization-free existence test.
PrimitiveDivisorSet primitive_divisors(const Natural& d, unsigned n);

// Existence only, no factorization: strips from v_n every factor shared with
// an earlier v_m by repeated gcd division; a cofactor > 1 remains iff a
// primitive divisor exists.
bool has_primitive_divisor(const Natural& d, unsigned n);

// One violation per n in (bound, n_max] whose v_n has no primitive divisor.
// n_max must exceed bound (default 6, the bound for these sequences).
std::vector<LemmaViolation> check_carmichael(const Natural& d, unsigned n_max,
                                             unsigned bound = 6);

}  // namespace diopell::lucas
