#pragma once

// Pell equation u^2 - d*v^2 = 1 for non-square d >= 2: fundamental solution
// via the continued-fraction expansion of sqrt(d), iteration of the solution
// sequence, and membership queries on the u-sequence.

#include <optional>

#include "diopell/arith.hpp"

namespace diopell::pell {

// Smallest positive solution (u1, v1); every solution is a power of it.
struct PellFundamental {
    Natural d;
    Natural u1;
    Natural v1;
};

// Coefficients of (u1 + v1*sqrt(d))^k.
struct PellPoint {
    Natural d;
    unsigned k;
    Natural u;
    Natural v;
};

// Throws std::domain_error ("Pell equation degenerate") if d < 2 or d is a
// perfect square. Integer-only PQa expansion; the equation is re-checked
// before returning.
PellFundamental fundamental_solution(const Natural& d);

// k-th solution via u_{k+1} = u1*u_k + d*v1*v_k, v_{k+1} = u1*v_k + v1*u_k.
PellPoint solution_at(const Natural& d, unsigned k);

// k with u_k = U, if any. The u-sequence is strictly increasing, so the scan
// stops as soon as u_k > U.
std::optional<unsigned> index_of_u(const Natural& d, const Natural& U);

// Walks (u_k, v_k) for k = 1, 2, ... by the linear recurrence. Cheaper than
// calling solution_at per index when sweeping a whole prefix.
class SolutionIterator {
  public:
    explicit SolutionIterator(const Natural& d);

    unsigned k() const { return k_; }
    const Natural& u() const { return u_; }
    const Natural& v() const { return v_; }

    void advance();

  private:
    Natural d_;
    Natural u1_, v1_;
    Natural u_, v_;
    unsigned k_ = 1;
};

}  // namespace diopell::pell
