#pragma once

// The central harness for (a^n - 1)(b^n - 1) = x^2: evaluation, forced
// D-decomposition, scope classification, bounded exhaustive search and
// theorem verification sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diopell/arith.hpp"

namespace diopell::diophantine {

// A verified solution together with its forced decomposition:
//   (a^n - 1)(b^n - 1) = x^2,  D = gcd(a^n - 1, b^n - 1),
//   a^n - 1 = D*y^2,  b^n - 1 = D*z^2,  x = D*y*z.
struct SolutionCertificate {
    Natural a;
    Natural b;
    unsigned n = 0;
    Natural x;
    Natural D;
    Natural y;
    Natural z;

    friend bool operator==(const SolutionCertificate&, const SolutionCertificate&) = default;
};

struct Decomposition {
    Natural D;
    Natural y;
    Natural z;
};

// Machine-checkable non-solution witness: at least one gcd-quotient fails to
// be a perfect square, which rules out a solution by coprimality.
struct Obstruction {
    Natural D;
    Natural a_quotient;
    Natural b_quotient;
    bool a_quotient_square = false;
    bool b_quotient_square = false;
};

using DecomposeResult = std::variant<Decomposition, Obstruction>;

enum class ScopeTag {
    THM1_CASE1,  // a = 2 (mod 3), b = 0 (mod 3)
    THM1_CASE2,  // a = 3 (mod 4), b = 0 (mod 2)
    THM1_CASE3,  // a = 4 (mod 5), b = 0 (mod 5)
    THM2,        // a even, b prime, b = 3 (mod 8)
    COHN_4N,     // scan restricted to 4 | n
    POWER_PAIR,  // b = a^k, k >= 2, scan restricted to k*n > 2
};

const char* scope_name(ScopeTag tag);
std::optional<ScopeTag> scope_from_name(const std::string& name);

struct SweepBounds {
    Natural a_max;
    Natural b_max;
    unsigned n_max = 0;
};

struct VerificationReport {
    ScopeTag scope = ScopeTag::THM1_CASE1;
    SweepBounds bounds;
    std::vector<SolutionCertificate> expected_exceptions;
    std::vector<SolutionCertificate> violations;
    std::uint64_t pairs_checked = 0;
    std::uint64_t instances_checked = 0;
};

// Certificate if (a^n - 1)(b^n - 1) is a perfect square, absent otherwise.
// Preconditions: a, b >= 2, a != b, n >= 1 (std::domain_error otherwise).
// When a solution exists the decomposition always succeeds; a failure there
// is an internal error, not a caller error.
std::optional<SolutionCertificate> evaluate(const Natural& a, const Natural& b, unsigned n);

// D = gcd(a^n - 1, b^n - 1) plus either both square quotients or the
// obstruction naming the non-square one.
DecomposeResult decompose(const Natural& a, const Natural& b, unsigned n);

// First matching case among THM1_CASE1/2/3, tested in that order.
std::optional<ScopeTag> scope_theorem1(const Natural& a, const Natural& b);

// a even, b prime, b = 3 (mod 8).
bool scope_theorem2(const Natural& a, const Natural& b);

// k >= 2 with b = a^k, detected by exact k-th-root extraction.
std::optional<unsigned> power_pair_exponent(const Natural& a, const Natural& b);

// All certificates with 2 <= a < b, a <= a_max, b <= b_max, 1 <= n <= n_max,
// ordered lexicographically by (a, b, n). The result is independent of the
// shard count.
std::vector<SolutionCertificate> search(const Natural& a_max, const Natural& b_max,
                                        unsigned n_max, unsigned shards = 1);

// Scans every in-scope pair and n <= n_max, classifying each solution found
// as an expected exception (permitted by the theorem or prior result) or a
// violation. Oriented scopes (THM1 cases, THM2, POWER_PAIR) test the
// predicate against both orientations of each pair and record certificates
// in predicate orientation; COHN_4N pairs are canonicalized as a < b.
VerificationReport verify_scope(ScopeTag scope, const Natural& a_max, const Natural& b_max,
                                unsigned n_max, unsigned shards = 1);

}  // namespace diopell::diophantine
