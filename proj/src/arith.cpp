#include "diopell/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace diopell {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

// Squares mod 64 land in a small residue set; cheap reject before isqrt.
constexpr std::array<bool, 64> square_residues_mod64() {
    std::array<bool, 64> t{};
    for (int i = 0; i < 64; ++i) t[(i * i) % 64] = true;
    return t;
}
constexpr auto kSquareMod64 = square_residues_mod64();

Natural pow_natural(const Natural& base, unsigned long e) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t limit = 100000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<uint32_t> ps;
        for (uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

Natural Factorization::value() const {
    Natural v = 1;
    for (const auto& [p, e] : factors) v *= pow_natural(p, e);
    return v;
}

Natural isqrt(const Natural& n) {
    require(n >= 0, "isqrt requires n >= 0");
    if (n == 0) return 0;

    // Start above the root, Newton descends monotonically to the floor.
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Natural x = Natural(1) << ((bits + 2) / 2);
    for (;;) {
        Natural y = (x + n / x) >> 1;
        if (y >= x) break;
        x = std::move(y);
    }

    if (x * x > n || (x + 1) * (x + 1) <= n)
        throw std::logic_error("isqrt postcondition failed");
    return x;
}

std::optional<Natural> is_perfect_square(const Natural& n) {
    if (n < 0) return std::nullopt;
    if (!kSquareMod64[mpz_fdiv_ui(n.get_mpz_t(), 64)]) return std::nullopt;
    Natural r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

Natural iroot(const Natural& n, unsigned k) {
    require(k >= 1, "iroot requires k >= 1");
    require(n >= 0, "iroot requires n >= 0");
    if (k == 1 || n <= 1) return n;

    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Natural x = Natural(1) << (bits / k + 1);
    for (;;) {
        // y = ((k-1)x + n / x^{k-1}) / k
        Natural y = ((k - 1) * x + n / pow_natural(x, k - 1)) / k;
        if (y >= x) break;
        x = std::move(y);
    }
    while (pow_natural(x, k) > n) --x;
    while (pow_natural(x + 1, k) <= n) ++x;

    if (pow_natural(x, k) > n || pow_natural(x + 1, k) <= n)
        throw std::logic_error("iroot postcondition failed");
    return x;
}

std::optional<Natural> is_perfect_power(const Natural& n, unsigned k) {
    require(k >= 1, "is_perfect_power requires k >= 1");
    if (n < 0) return std::nullopt;
    Natural r = iroot(n, k);
    if (pow_natural(r, k) == n) return r;
    return std::nullopt;
}

namespace {

// One strong probable-prime round. n odd, n > 3, 2 <= a < n.
bool miller_rabin_round(const Natural& n, const Natural& a, const Natural& odd_part, unsigned twos) {
    Natural x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), odd_part.get_mpz_t(), n.get_mpz_t());
    Natural n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned i = 1; i < twos; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1) return true;
    }
    return false;
}

// Strong Lucas probable-prime test with Selfridge parameters (method A):
// first D in 5, -7, 9, -11, ... with jacobi(D, n) = -1, P = 1, Q = (1-D)/4.
// n odd, not a perfect square, no small prime factors.
bool strong_lucas_round(const Natural& n) {
    long d_abs = 5;
    int sign = 1;
    Natural D;
    for (;;) {
        D = sign * d_abs;
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0 && n != d_abs) return false;  // shares a factor with n
        d_abs += 2;
        sign = -sign;
    }
    Natural Q = (1 - D) / 4;

    // n + 1 = e * 2^s, e odd
    Natural e = n + 1;
    unsigned s = unsigned(mpz_scan1(e.get_mpz_t(), 0));
    e >>= s;

    auto halve_mod = [&n](Natural& t) {
        // t / 2 mod n for odd n
        if (mpz_odd_p(t.get_mpz_t())) t += n;
        t >>= 1;
        t %= n;
        if (t < 0) t += n;
    };

    // Binary ladder for U_e, V_e (P = 1), tracking Q^m mod n.
    Natural u = 1, v = 1, qk = Q % n;  // U_1, V_1, Q^1
    if (qk < 0) qk += n;
    size_t top = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = top - 1; i-- > 0;) {
        // double: (U, V, Q^m) -> (U*V, V^2 - 2Q^m, Q^2m)
        u = (u * v) % n;
        v = (v * v - 2 * qk) % n;
        if (v < 0) v += n;
        qk = (qk * qk) % n;
        if (mpz_tstbit(e.get_mpz_t(), unsigned(i))) {
            // add one: U' = (U + V)/2, V' = (D*U + V)/2, Q^m -> Q^{m+1}
            Natural u2 = u + v;
            Natural v2 = D * u + v;
            halve_mod(u2);
            halve_mod(v2);
            u = std::move(u2);
            v = std::move(v2);
            qk = (qk * Q) % n;
            if (qk < 0) qk += n;
        }
    }

    if (u == 0 || v == 0) return true;
    // V_{e*2^r} = 0 for some 0 <= r < s
    for (unsigned r = 1; r < s; ++r) {
        v = (v * v - 2 * qk) % n;
        if (v < 0) v += n;
        if (v == 0) return true;
        qk = (qk * qk) % n;
    }
    return false;
}

// Deterministic for n < 3.3*10^24 (covers everything below 2^64).
constexpr std::array<unsigned, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr unsigned kExtraRounds = 40;

}  // namespace

bool is_prime(const Natural& n) {
    if (n < 2) return false;

    for (uint32_t p : small_primes()) {
        if (p > 1000) break;
        if (mpz_cmp_ui(n.get_mpz_t(), (unsigned long)p * p) < 0) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
    }

    Natural odd_part = n - 1;
    unsigned twos = unsigned(mpz_scan1(odd_part.get_mpz_t(), 0));
    odd_part >>= twos;

    for (unsigned w : kWitnesses)
        if (!miller_rabin_round(n, w, odd_part, twos)) return false;

    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;

    // Above 2^64 the witness set is no longer proven complete; pile on
    // derived rounds plus a strong Lucas round. Bases come from a fixed
    // xorshift stream seeded from n, so results are reproducible.
    if (is_perfect_square(n)) return false;
    uint64_t state = mpz_fdiv_ui(n.get_mpz_t(), 0xFFFFFFFFFFFFFFC5ull) | 1;
    for (unsigned i = 0; i < kExtraRounds; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        Natural a = Natural(uint64_t(state | 2));  // >= 2, far below n
        if (!miller_rabin_round(n, a, odd_part, twos)) return false;
    }
    return strong_lucas_round(n);
}

namespace {

// Brent's cycle-finding variant of Pollard rho with batched gcds.
// See "An Improved Monte Carlo Factorization Algorithm", BIT 20 (1980).
// m odd composite with no factor <= 10^5. Returns a non-trivial factor,
// or m itself on a rare full-cycle failure (caller retries with c+1).
Natural brent_rho(const Natural& m, unsigned long c) {
    const unsigned long batch = 128;
    Natural x = 2, y = 2, ys = 2, q = 1, g = 1;
    unsigned long r = 1;
    auto step = [&m, c](Natural& t) {
        t = (t * t + c) % m;
    };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(batch, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                step(y);
                q = (q * abs(x - y)) % m;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
            k += batch;
        }
        r *= 2;
    }
    if (g == m) {
        // Backtrack one step at a time.
        do {
            step(ys);
            Natural diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split_into(const Natural& m, std::map<Natural, unsigned>& out) {
    if (m == 1) return;
    if (is_prime(m)) {
        ++out[m];
        return;
    }
    // Perfect powers first: rho behaves poorly on p^2.
    for (unsigned k = 2; k <= mpz_sizeinbase(m.get_mpz_t(), 2); ++k) {
        if (auto r = is_perfect_power(m, k)) {
            std::map<Natural, unsigned> base;
            split_into(*r, base);
            for (const auto& [p, e] : base) out[p] += e * k;
            return;
        }
    }
    for (unsigned long c = 1;; ++c) {
        Natural f = brent_rho(m, c);
        if (f != 1 && f != m) {
            split_into(f, out);
            split_into(m / f, out);
            return;
        }
    }
}

}  // namespace

Factorization factorize(const Natural& n) {
    require(n >= 2, "factorize requires n >= 2");

    Factorization result;
    Natural m = n;
    for (uint32_t p : small_primes()) {
        if (mpz_cmp_ui(m.get_mpz_t(), (unsigned long)p * p) < 0) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        unsigned e = 0;
        do {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
        result.factors.push_back({Natural(p), e});
    }
    if (m > 1) {
        if (is_prime(m)) {
            result.factors.push_back({m, 1});
        } else {
            std::map<Natural, unsigned> rest;
            split_into(m, rest);
            for (const auto& [p, e] : rest) result.factors.push_back({p, e});
        }
    }

    std::sort(result.factors.begin(), result.factors.end(),
              [](const PrimePower& l, const PrimePower& r) { return l.prime < r.prime; });
    if (result.value() != n) throw std::logic_error("factorize postcondition failed");
    return result;
}

SquarefreeDecomposition squarefree_decompose(const Natural& n) {
    require(n >= 1, "squarefree_decompose requires n >= 1");
    if (n == 1) return {1, 1};

    SquarefreeDecomposition out{1, 1};
    for (const auto& [p, e] : factorize(n).factors) {
        if (e % 2 == 1) out.d *= p;
        out.w *= pow_natural(p, e / 2);
    }
    if (out.d * out.w * out.w != n) throw std::logic_error("squarefree postcondition failed");
    return out;
}

}  // namespace diopell
