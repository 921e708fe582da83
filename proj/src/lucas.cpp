#include "diopell/lucas.hpp"

#include <stdexcept>

#include "diopell/pell.hpp"

namespace diopell::lucas {

namespace {

// Full factorization stays affordable up to here; beyond it check_lemma1
// falls back to trial division plus the residue certificate.
constexpr size_t kFactorBitLimit = 80;

std::vector<Natural> u_prefix(const Natural& d, unsigned k_max) {
    std::vector<Natural> us;
    us.reserve(k_max);
    for (pell::SolutionIterator it(d); it.k() <= k_max; it.advance()) us.push_back(it.u());
    return us;
}

std::vector<Natural> v_prefix(const Natural& d, unsigned n_max) {
    std::vector<Natural> vs;
    vs.reserve(n_max);
    for (pell::SolutionIterator it(d); it.k() <= n_max; it.advance()) vs.push_back(it.v());
    return vs;
}

bool pm1_mod8(const Natural& p) {
    unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 8);
    return r == 1 || r == 7;
}

std::string str(const Natural& n) { return n.get_str(); }

}  // namespace

const char* lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::L1P1: return "L1P1";
        case LemmaId::L1P2: return "L1P2";
        case LemmaId::L1P3: return "L1P3";
        case LemmaId::L3: return "L3";
        case LemmaId::CARMICHAEL: return "CARMICHAEL";
    }
    return "?";
}

std::vector<LemmaViolation> check_lemma1(const Natural& d, unsigned k_max) {
    const auto us = u_prefix(d, k_max);
    const Natural& u1 = us[0];
    std::vector<LemmaViolation> out;

    for (unsigned k = 1; k <= k_max; ++k) {
        const Natural& uk = us[k - 1];

        if (k % 2 == 1) {
            // u1 | u_k with odd quotient
            if (!mpz_divisible_p(uk.get_mpz_t(), u1.get_mpz_t())) {
                out.push_back({LemmaId::L1P2, d, k,
                               "u_1 = " + str(u1) + " does not divide u_" + std::to_string(k)});
            } else if (Natural q = uk / u1; mpz_even_p(q.get_mpz_t())) {
                out.push_back({LemmaId::L1P2, d, k,
                               "u_" + std::to_string(k) + "/u_1 = " + str(q) + " is even"});
            }
        } else {
            // Every prime factor of u_k must be +-1 mod 8.
            Natural cofactor = uk;
            auto flag_prime = [&](const Natural& p) {
                if (!pm1_mod8(p))
                    out.push_back({LemmaId::L1P1, d, k,
                                   "prime " + str(p) + " | u_" + std::to_string(k) + " with " +
                                       str(p) + " % 8 == " + std::to_string(mpz_fdiv_ui(p.get_mpz_t(), 8))});
            };
            if (mpz_sizeinbase(uk.get_mpz_t(), 2) <= kFactorBitLimit) {
                for (const auto& [p, e] : factorize(uk).factors) flag_prime(p);
                cofactor = 1;
            } else {
                for (uint32_t p : small_primes()) {
                    if (cofactor == 1) break;
                    if (!mpz_divisible_ui_p(cofactor.get_mpz_t(), p)) continue;
                    flag_prime(p);
                    do mpz_divexact_ui(cofactor.get_mpz_t(), cofactor.get_mpz_t(), p);
                    while (mpz_divisible_ui_p(cofactor.get_mpz_t(), p));
                }
                if (cofactor > 1 && is_prime(cofactor)) {
                    flag_prime(cofactor);
                    cofactor = 1;
                }
            }
            if (cofactor > 1) {
                // Residue certificate for the unfactored part: with r = 2*u_{k/2},
                // r^2 - 2 = 2*(2*u_{k/2}^2 - 1) = 2*u_k = 0 (mod cofactor), so 2 is
                // a quadratic residue mod every prime of the cofactor, forcing
                // p = +-1 (mod 8). Verified, not assumed.
                Natural r = (2 * us[k / 2 - 1]) % cofactor;
                if ((r * r - 2) % cofactor != 0)
                    out.push_back({LemmaId::L1P1, d, k,
                                   "residue certificate failed for unfactored cofactor " +
                                       str(cofactor)});
            }
        }

        for (unsigned q : {2u, 3u, 5u}) {
            if (mpz_divisible_ui_p(uk.get_mpz_t(), q) && !mpz_divisible_ui_p(u1.get_mpz_t(), q))
                out.push_back({LemmaId::L1P3, d, k,
                               "q = " + std::to_string(q) + " divides u_" + std::to_string(k) +
                                   " but not u_1 = " + str(u1)});
        }
    }
    return out;
}

std::vector<LemmaViolation> check_lemma3(const Natural& d, unsigned k_max) {
    const auto us = u_prefix(d, k_max);

    bool any_even = false, any_odd = false;
    for (const auto& u : us) (mpz_even_p(u.get_mpz_t()) ? any_even : any_odd) = true;
    if (!any_even || !any_odd) return {};  // single parity: vacuous

    std::vector<LemmaViolation> out;
    for (unsigned k = 1; k <= k_max; ++k) {
        bool u_even = mpz_even_p(us[k - 1].get_mpz_t());
        bool k_even = (k % 2 == 0);
        if (u_even == k_even)
            out.push_back({LemmaId::L3, d, k,
                           std::string("u_") + std::to_string(k) + " = " + str(us[k - 1]) +
                               " is " + (u_even ? "even" : "odd") + " at " +
                               (k_even ? "even" : "odd") + " index"});
    }
    return out;
}

PrimitiveDivisorSet primitive_divisors(const Natural& d, unsigned n) {
    if (n < 1) throw std::domain_error("primitive_divisors requires n >= 1");
    const auto vs = v_prefix(d, n);
    const Natural& vn = vs[n - 1];

    PrimitiveDivisorSet out{d, n, {}};
    if (vn == 1) return out;  // v_1 = 1 happens, e.g. d = 3
    for (const auto& [p, e] : factorize(vn).factors) {
        bool primitive = true;
        for (unsigned m = 1; m < n && primitive; ++m)
            if (mpz_divisible_p(vs[m - 1].get_mpz_t(), p.get_mpz_t())) primitive = false;
        if (!primitive) continue;
        // soundness re-check, independently of the factorizer
        if (!mpz_divisible_p(vn.get_mpz_t(), p.get_mpz_t()) || !is_prime(p))
            throw std::logic_error("primitive divisor candidate failed re-verification");
        out.primes.push_back(p);
    }
    return out;  // factorize returns ascending primes, order preserved
}

namespace {

// Strip every factor shared with an earlier term; whatever survives is a
// product of primitive primes.
bool primitive_part_nontrivial(const std::vector<Natural>& vs, unsigned n) {
    Natural w = vs[n - 1];
    for (unsigned m = 1; m < n && w > 1; ++m) {
        Natural g;
        mpz_gcd(g.get_mpz_t(), w.get_mpz_t(), vs[m - 1].get_mpz_t());
        while (g > 1) {
            mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), g.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), w.get_mpz_t(), vs[m - 1].get_mpz_t());
        }
    }
    return w > 1;
}

}  // namespace

bool has_primitive_divisor(const Natural& d, unsigned n) {
    if (n < 1) throw std::domain_error("has_primitive_divisor requires n >= 1");
    return primitive_part_nontrivial(v_prefix(d, n), n);
}

std::vector<LemmaViolation> check_carmichael(const Natural& d, unsigned n_max, unsigned bound) {
    if (n_max <= bound)
        throw std::domain_error("check_carmichael requires n_max > bound");
    const auto vs = v_prefix(d, n_max);
    std::vector<LemmaViolation> out;
    for (unsigned n = bound + 1; n <= n_max; ++n) {
        if (!primitive_part_nontrivial(vs, n))
            out.push_back({LemmaId::CARMICHAEL, d, n,
                           "v_" + std::to_string(n) + " has no primitive divisor"});
    }
    return out;
}

}  // namespace diopell::lucas
