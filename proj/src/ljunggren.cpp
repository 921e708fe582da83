#include "diopell/ljunggren.hpp"

#include <stdexcept>
#include <utility>

namespace diopell::ljunggren {

namespace {

uint64_t powmod_u64(uint64_t base, unsigned exp, uint64_t mod) {
    uint64_t r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// Residue prefilter for the p-th-power test. Primes q = 1 (mod p) keep the
// p-th powers sparse (a subgroup of index p of each (Z/q)*), so candidates
// 2y^2 - 1 are mostly rejected by one table lookup. The accepting path still
// proves every hit by exact root extraction and re-exponentiation.
std::pair<unsigned long, std::vector<bool>> power_residue_table(unsigned p) {
    unsigned long m = 1;
    int picked = 0;
    for (uint32_t q : small_primes()) {
        if (q % p != 1) continue;
        if (m > 2000000 / q) break;
        m *= q;
        if (++picked == 3) break;
    }
    if (m == 1) m = 45045;  // no cooperative primes found; still a valid filter
    std::vector<bool> table(m, false);
    for (unsigned long x = 0; x < m; ++x) table[powmod_u64(x, p, m)] = true;
    return {m, std::move(table)};
}

}  // namespace

std::vector<LjunggrenSolution> search_ljunggren(unsigned p, const Natural& y_max) {
    if (p < 3 || p % 2 == 0 || !is_prime(Natural(p)))
        throw std::domain_error("search_ljunggren requires an odd prime p >= 3");
    if (y_max < 1) throw std::domain_error("search_ljunggren requires y_max >= 1");

    const auto [modulus, residues] = power_residue_table(p);

    std::vector<LjunggrenSolution> out;
    Natural t = 1;  // 2y^2 - 1
    for (Natural y = 1; y <= y_max; ++y) {
        if (residues[mpz_fdiv_ui(t.get_mpz_t(), modulus)]) {
            if (auto x = is_perfect_power(t, p)) {
                // re-check by exact exponentiation
                Natural back;
                mpz_pow_ui(back.get_mpz_t(), x->get_mpz_t(), p);
                if (back != t) throw std::logic_error("p-th root re-check failed");
                out.push_back({p, *x, y});
            }
        }
        t += 4 * y + 2;  // 2(y+1)^2 - 1 = 2y^2 - 1 + 4y + 2
    }
    return out;
}

}  // namespace diopell::ljunggren
