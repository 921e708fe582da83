#include "diopell/diophantine.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <thread>

namespace diopell::diophantine {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(what);
}

Natural pow_minus_one(const Natural& base, unsigned n) {
    Natural r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), n);
    return r - 1;
}

// Quadratic-residue prefilter: squares mod 64*63*65 form a sparse set, so
// most non-squares are rejected from (a^n-1)(b^n-1) mod M without ever
// forming the big product. The accepting path always re-tests exactly.
constexpr uint64_t kFilterModulus = 64 * 63 * 65;

const std::vector<bool>& square_residue_table() {
    static const std::vector<bool> table = [] {
        std::vector<bool> t(kFilterModulus, false);
        for (uint64_t i = 0; i < kFilterModulus; ++i) t[i * i % kFilterModulus] = true;
        return t;
    }();
    return table;
}

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

bool product_could_be_square(const Natural& a, const Natural& b, unsigned n) {
    uint64_t ra = (powmod_u64(mpz_fdiv_ui(a.get_mpz_t(), kFilterModulus), n, kFilterModulus) +
                   kFilterModulus - 1) % kFilterModulus;
    uint64_t rb = (powmod_u64(mpz_fdiv_ui(b.get_mpz_t(), kFilterModulus), n, kFilterModulus) +
                   kFilterModulus - 1) % kFilterModulus;
    return square_residue_table()[ra * rb % kFilterModulus];
}

void check_pair(const Natural& a, const Natural& b, unsigned n) {
    require(a >= 2 && b >= 2, "evaluate requires a, b >= 2");
    require(a != b, "evaluate requires a != b");
    require(n >= 1, "evaluate requires n >= 1");
}

}  // namespace

const char* scope_name(ScopeTag tag) {
    switch (tag) {
        case ScopeTag::THM1_CASE1: return "THM1_CASE1";
        case ScopeTag::THM1_CASE2: return "THM1_CASE2";
        case ScopeTag::THM1_CASE3: return "THM1_CASE3";
        case ScopeTag::THM2: return "THM2";
        case ScopeTag::COHN_4N: return "COHN_4N";
        case ScopeTag::POWER_PAIR: return "POWER_PAIR";
    }
    return "?";
}

std::optional<ScopeTag> scope_from_name(const std::string& name) {
    std::string key;
    for (char c : name)
        key += (c == '_') ? '-' : char(std::tolower(static_cast<unsigned char>(c)));
    if (key == "thm1-case1") return ScopeTag::THM1_CASE1;
    if (key == "thm1-case2") return ScopeTag::THM1_CASE2;
    if (key == "thm1-case3") return ScopeTag::THM1_CASE3;
    if (key == "thm2") return ScopeTag::THM2;
    if (key == "cohn-4n") return ScopeTag::COHN_4N;
    if (key == "power-pair") return ScopeTag::POWER_PAIR;
    return std::nullopt;
}

std::optional<SolutionCertificate> evaluate(const Natural& a, const Natural& b, unsigned n) {
    check_pair(a, b, n);
    if (!product_could_be_square(a, b, n)) return std::nullopt;

    Natural A = pow_minus_one(a, n);
    Natural B = pow_minus_one(b, n);
    auto x = is_perfect_square(A * B);
    if (!x) return std::nullopt;

    Natural D;
    mpz_gcd(D.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    auto y = is_perfect_square(A / D);
    auto z = is_perfect_square(B / D);
    // A/D and B/D are coprime with square product, so both must be squares.
    if (!y || !z) throw std::logic_error("forced decomposition failed on a solution");

    SolutionCertificate cert{a, b, n, *x, D, *y, *z};
    if (cert.D * cert.y * cert.z != cert.x)
        throw std::logic_error("certificate identity x = D*y*z failed");
    return cert;
}

DecomposeResult decompose(const Natural& a, const Natural& b, unsigned n) {
    check_pair(a, b, n);

    Natural A = pow_minus_one(a, n);
    Natural B = pow_minus_one(b, n);
    Natural D;
    mpz_gcd(D.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    Natural qa = A / D;
    Natural qb = B / D;
    auto y = is_perfect_square(qa);
    auto z = is_perfect_square(qb);
    if (y && z) return Decomposition{D, *y, *z};
    return Obstruction{D, qa, qb, y.has_value(), z.has_value()};
}

namespace {

unsigned long mod_u(const Natural& v, unsigned long m) { return mpz_fdiv_ui(v.get_mpz_t(), m); }

bool case1(const Natural& a, const Natural& b) { return mod_u(a, 3) == 2 && mod_u(b, 3) == 0; }
bool case2(const Natural& a, const Natural& b) { return mod_u(a, 4) == 3 && mod_u(b, 2) == 0; }
bool case3(const Natural& a, const Natural& b) { return mod_u(a, 5) == 4 && mod_u(b, 5) == 0; }

}  // namespace

std::optional<ScopeTag> scope_theorem1(const Natural& a, const Natural& b) {
    require(a >= 2 && b >= 2, "scope predicates require a, b >= 2");
    if (case1(a, b)) return ScopeTag::THM1_CASE1;
    if (case2(a, b)) return ScopeTag::THM1_CASE2;
    if (case3(a, b)) return ScopeTag::THM1_CASE3;
    return std::nullopt;
}

bool scope_theorem2(const Natural& a, const Natural& b) {
    require(a >= 2 && b >= 2, "scope predicates require a, b >= 2");
    return mod_u(a, 2) == 0 && mod_u(b, 8) == 3 && is_prime(b);
}

std::optional<unsigned> power_pair_exponent(const Natural& a, const Natural& b) {
    require(a >= 2 && b >= 2, "scope predicates require a, b >= 2");
    size_t b_bits = mpz_sizeinbase(b.get_mpz_t(), 2);
    for (unsigned k = 2; k <= b_bits; ++k) {
        auto r = is_perfect_power(b, k);
        if (r && *r == a) return k;
    }
    return std::nullopt;
}

namespace {

struct SweepTask {
    unsigned long a;
    unsigned long b;
    unsigned power_k = 0;  // POWER_PAIR only: b = a^power_k
};

unsigned long bound_as_ulong(const Natural& bound, const char* what) {
    if (!bound.fits_ulong_p()) throw std::domain_error(std::string(what) + " too large for a sweep");
    return bound.get_ui();
}

std::vector<unsigned> scope_n_values(ScopeTag scope, unsigned n_max, unsigned power_k) {
    std::vector<unsigned> ns;
    if (scope == ScopeTag::COHN_4N) {
        for (unsigned n = 4; n <= n_max; n += 4) ns.push_back(n);
    } else if (scope == ScopeTag::POWER_PAIR) {
        // the prior result constrains k*n > 2 only
        for (unsigned n = 1; n <= n_max; ++n)
            if (power_k * n > 2) ns.push_back(n);
    } else {
        for (unsigned n = 1; n <= n_max; ++n) ns.push_back(n);
    }
    return ns;
}

std::vector<SweepTask> enumerate_tasks(ScopeTag scope, unsigned long a_max, unsigned long b_max) {
    std::vector<SweepTask> tasks;
    switch (scope) {
        case ScopeTag::THM1_CASE1:
        case ScopeTag::THM1_CASE2:
        case ScopeTag::THM1_CASE3:
        case ScopeTag::THM2: {
            auto pred = (scope == ScopeTag::THM1_CASE1)   ? case1
                        : (scope == ScopeTag::THM1_CASE2) ? case2
                        : (scope == ScopeTag::THM1_CASE3) ? case3
                                                          : scope_theorem2;
            // oriented: the predicate sees every pair in both orientations
            for (unsigned long a = 2; a <= a_max; ++a)
                for (unsigned long b = 2; b <= b_max; ++b)
                    if (a != b && pred(Natural(a), Natural(b))) tasks.push_back({a, b});
            break;
        }
        case ScopeTag::COHN_4N:
            for (unsigned long a = 2; a <= a_max; ++a)
                for (unsigned long b = a + 1; b <= b_max; ++b) tasks.push_back({a, b});
            break;
        case ScopeTag::POWER_PAIR:
            for (unsigned long a = 2; a <= a_max; ++a) {
                Natural power = Natural(a) * a;
                for (unsigned k = 2; power <= b_max; ++k, power *= a)
                    tasks.push_back({a, power.get_ui(), k});
            }
            break;
    }
    return tasks;
}

bool expected_exception(ScopeTag scope, const SolutionCertificate& c, unsigned power_k) {
    switch (scope) {
        case ScopeTag::THM1_CASE1:
        case ScopeTag::THM1_CASE2:
        case ScopeTag::THM1_CASE3:
            return c.n == 2;
        case ScopeTag::THM2:
            return false;
        case ScopeTag::COHN_4N:
            return c.a == 13 && c.b == 239 && c.n == 4;
        case ScopeTag::POWER_PAIR:
            return (c.a == 2 && c.n == 3 && power_k == 2) ||
                   (c.a == 3 && c.n == 1 && power_k == 5) ||
                   (c.a == 7 && c.n == 1 && power_k == 4);
    }
    return false;
}

bool cert_less(const SolutionCertificate& l, const SolutionCertificate& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.n < r.n;
}

struct ShardResult {
    std::vector<SolutionCertificate> exceptions;
    std::vector<SolutionCertificate> violations;
    std::uint64_t instances = 0;
};

// Round-robin task assignment; every shard works an interleaved slice. The
// merge is concatenate-and-sort, so the output is byte-identical for any
// shard count.
std::vector<ShardResult> run_shards(const std::vector<SweepTask>& tasks, ScopeTag scope,
                                    unsigned n_max, unsigned shards) {
    if (shards < 1) shards = 1;
    std::vector<ShardResult> results(shards);
    auto worker = [&](unsigned shard) {
        ShardResult& local = results[shard];
        for (size_t i = shard; i < tasks.size(); i += shards) {
            const SweepTask& t = tasks[i];
            Natural a(t.a), b(t.b);
            for (unsigned n : scope_n_values(scope, n_max, t.power_k)) {
                ++local.instances;
                if (auto cert = evaluate(a, b, n)) {
                    if (expected_exception(scope, *cert, t.power_k))
                        local.exceptions.push_back(std::move(*cert));
                    else
                        local.violations.push_back(std::move(*cert));
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(shards);
    for (unsigned s = 0; s < shards; ++s) pool.emplace_back(worker, s);
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace

std::vector<SolutionCertificate> search(const Natural& a_max, const Natural& b_max,
                                        unsigned n_max, unsigned shards) {
    unsigned long am = bound_as_ulong(a_max, "a_max");
    unsigned long bm = bound_as_ulong(b_max, "b_max");

    std::vector<SweepTask> tasks;
    for (unsigned long a = 2; a <= am; ++a)
        for (unsigned long b = a + 1; b <= bm; ++b) tasks.push_back({a, b});

    if (shards < 1) shards = 1;
    std::vector<std::vector<SolutionCertificate>> found(shards);
    std::vector<std::thread> pool;
    pool.reserve(shards);
    for (unsigned s = 0; s < shards; ++s)
        pool.emplace_back([&, s] {
            for (size_t i = s; i < tasks.size(); i += shards) {
                Natural a(tasks[i].a), b(tasks[i].b);
                for (unsigned n = 1; n <= n_max; ++n)
                    if (auto cert = evaluate(a, b, n)) found[s].push_back(std::move(*cert));
            }
        });
    for (auto& th : pool) th.join();

    std::vector<SolutionCertificate> out;
    for (auto& part : found)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    std::sort(out.begin(), out.end(), cert_less);
    return out;
}

VerificationReport verify_scope(ScopeTag scope, const Natural& a_max, const Natural& b_max,
                                unsigned n_max, unsigned shards) {
    unsigned long am = bound_as_ulong(a_max, "a_max");
    unsigned long bm = bound_as_ulong(b_max, "b_max");

    VerificationReport report;
    report.scope = scope;
    report.bounds = {a_max, b_max, n_max};

    auto tasks = enumerate_tasks(scope, am, bm);
    report.pairs_checked = tasks.size();

    for (auto& shard : run_shards(tasks, scope, n_max, shards)) {
        report.instances_checked += shard.instances;
        report.expected_exceptions.insert(report.expected_exceptions.end(),
                                          std::make_move_iterator(shard.exceptions.begin()),
                                          std::make_move_iterator(shard.exceptions.end()));
        report.violations.insert(report.violations.end(),
                                 std::make_move_iterator(shard.violations.begin()),
                                 std::make_move_iterator(shard.violations.end()));
    }
    std::sort(report.expected_exceptions.begin(), report.expected_exceptions.end(), cert_less);
    std::sort(report.violations.begin(), report.violations.end(), cert_less);
    return report;
}

}  // namespace diopell::diophantine
