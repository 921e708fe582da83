#include "diopell/pell.hpp"

#include <stdexcept>
#include <utility>

namespace diopell::pell {

namespace {

void check_d(const Natural& d) {
    if (d < 2 || is_perfect_square(d))
        throw std::domain_error("Pell equation degenerate: d must be a non-square >= 2");
}

}  // namespace

PellFundamental fundamental_solution(const Natural& d) {
    check_d(d);

    // Continued-fraction expansion of sqrt(d), integer-only:
    //   P_{i+1} = a_i*Q_i - P_i,  Q_{i+1} = (d - P_{i+1}^2)/Q_i,
    //   a_{i+1} = floor((a0 + P_{i+1})/Q_{i+1}),
    // convergents h_i/k_i by the usual three-term recurrence. The first
    // convergent with h^2 - d*k^2 = 1 is the fundamental solution.
    // https://en.wikipedia.org/wiki/Pell%27s_equation#Fundamental_solution_via_continued_fractions
    const Natural a0 = isqrt(d);
    Natural P = 0, Q = 1, a = a0;
    Natural h_prev = 1, h = a0;
    Natural k_prev = 0, k = 1;

    while (h * h - d * k * k != 1) {
        P = a * Q - P;
        Q = (d - P * P) / Q;
        a = (a0 + P) / Q;
        // 1 <= P <= a0, 1 <= Q <= 2*a0 throughout the periodic part
        Natural h_next = a * h + h_prev;
        Natural k_next = a * k + k_prev;
        h_prev = std::move(h);
        h = std::move(h_next);
        k_prev = std::move(k);
        k = std::move(k_next);
    }

    if (h * h - d * k * k != 1 || k < 1)
        throw std::logic_error("Pell fundamental solution postcondition failed");
    return {d, h, k};
}

PellPoint solution_at(const Natural& d, unsigned k) {
    if (k < 1) throw std::domain_error("Pell solution index must be >= 1");
    SolutionIterator it(d);
    while (it.k() < k) it.advance();
    PellPoint point{d, k, it.u(), it.v()};
    if (point.u * point.u - d * point.v * point.v != 1)
        throw std::logic_error("Pell point postcondition failed");
    return point;
}

std::optional<unsigned> index_of_u(const Natural& d, const Natural& U) {
    if (U < 1) throw std::domain_error("index_of_u requires U >= 1");
    // u_k is strictly increasing, so the scan terminates.
    for (SolutionIterator it(d); it.u() <= U; it.advance())
        if (it.u() == U) return it.k();
    return std::nullopt;
}

SolutionIterator::SolutionIterator(const Natural& d) : d_(d) {
    PellFundamental f = fundamental_solution(d);
    u1_ = f.u1;
    v1_ = f.v1;
    u_ = u1_;
    v_ = v1_;
}

void SolutionIterator::advance() {
    Natural u_next = u1_ * u_ + d_ * v1_ * v_;
    Natural v_next = u1_ * v_ + v1_ * u_;
    u_ = std::move(u_next);
    v_ = std::move(v_next);
    ++k_;
}

}  // namespace diopell::pell
