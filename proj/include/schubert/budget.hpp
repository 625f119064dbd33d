#ifndef SCHUBERT_BUDGET_HPP
#define SCHUBERT_BUDGET_HPP

#include <string>

#include "schubert/bigint.hpp"
#include "schubert/errors.hpp"

namespace schubert {

// Hard caps on brute-force searches. A search whose size exceeds its cap is
// refused with BudgetExceeded; there is no silent truncation or sampling.
struct Budget {
    unsigned long long max_points = 10'000'000;     // enumerated variety points
    unsigned long long max_subspaces = 10'000'000;  // hyperplanes / codim-r duals

    void check_points(const BigInt& count) const {
        if (count > big_from_ull(max_points))
            throw BudgetExceeded("point enumeration of size " + count.get_str() +
                                 " exceeds budget " + std::to_string(max_points));
    }
    void check_subspaces(const BigInt& count) const {
        if (count > big_from_ull(max_subspaces))
            throw BudgetExceeded("subspace search of size " + count.get_str() +
                                 " exceeds budget " + std::to_string(max_subspaces));
    }
};

}  // namespace schubert

#endif
