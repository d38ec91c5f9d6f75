#pragma once

#include <cstddef>

namespace cospec {

/// Sign census of a diagonal matrix congruent to a shifted adjacency matrix.
struct InertiaTriple {
    std::size_t n_plus = 0;
    std::size_t n_zero = 0;
    std::size_t n_minus = 0;

    friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

/// Counts of eigenvalues strictly above, equal to, and strictly below a probe.
struct CountTriple {
    std::size_t greater = 0;
    std::size_t equal = 0;
    std::size_t less = 0;

    friend bool operator==(const CountTriple&, const CountTriple&) = default;
};

}  // namespace cospec
