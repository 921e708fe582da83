#pragma once

// Bounded search for x^p = 2y^2 - 1 with p an odd prime.

#include <vector>

#include "diopell/arith.hpp"

namespace diopell::ljunggren {

struct LjunggrenSolution {
    unsigned p;
    Natural x;
    Natural y;
};

// All solutions with 1 <= y <= y_max, ascending in y. Iterates over y (the
// right side is monotone in y) and tests 2y^2 - 1 for an exact p-th power.
// Throws std::domain_error unless p is an odd prime >= 3.
std::vector<LjunggrenSolution> search_ljunggren(unsigned p, const Natural& y_max);

}  // namespace diopell::ljunggren
