#pragma once

#include "cospec/cotree.hpp"
#include "cospec/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cospec {

/// Suffix products a_r * a_{r-1} * ... * a_l of the balanced parameters,
/// the building block of every level shift below.
struct GammaTable {
    BalancedParams params;
    std::vector<Int> values;  // values[l-1] for l = 1..r

    explicit GammaTable(BalancedParams p) : params(std::move(p)) {
        params.validate();
        std::size_t r = params.depth();
        values.assign(r, Int(1));
        values[r - 1] = params.a[r - 1];
        for (std::size_t l = r - 1; l >= 1; --l) values[l - 1] = values[l] * params.a[l - 1];
    }

    const Int& at(std::size_t l) const {
        if (l < 1 || l > values.size()) throw std::out_of_range("GammaTable: level out of range");
        return values[l - 1];
    }
};

inline Int suffix_product(const BalancedParams& p, std::size_t l) { return GammaTable(p).at(l); }

/// Shift value attached to level i (1 <= i <= r-1): an alternating sum of
/// suffix products whose sign pattern depends on the parity of i, plus 1
/// exactly when the depth r is odd. The graph eigenvalue contributed by
/// level i is the negation of this value.
inline Int level_shift(const BalancedParams& p, std::size_t i) {
    p.validate();
    std::size_t r = p.depth();
    if (i < 1 || i >= r) throw std::out_of_range("level_shift: level must be in 1..r-1");
    GammaTable g(p);
    Int sum = 0;
    for (std::size_t k = 1; k <= r - i; ++k) {
        bool negative = (i % 2 == 0) ? (k % 2 == 1) : (k % 2 == 0);
        if (negative) sum -= g.at(i + k);
        else sum += g.at(i + k);
    }
    if (r % 2 == 1) sum += 1;
    return sum;
}

inline Int level_eigenvalue(const BalancedParams& p, std::size_t i) { return -level_shift(p, i); }

/// a1 * ... * a_{i-1} * (a_i - 1).
inline Int level_multiplicity(const BalancedParams& p, std::size_t i) {
    p.validate();
    if (i < 1 || i >= p.depth()) throw std::out_of_range("level_multiplicity: level must be in 1..r-1");
    Int m = p.a[i - 1] - 1;
    for (std::size_t j = 0; j + 1 < i; ++j) m *= p.a[j];
    return m;
}

/// Eigenvalue -1 (odd depth) or 0 (even depth) with multiplicity
/// a1 * ... * a_{r-1} * (a_r - 1).
inline std::pair<Int, Int> boundary_eigenvalue(const BalancedParams& p) {
    p.validate();
    std::size_t r = p.depth();
    Int mult = p.a[r - 1] - 1;
    for (std::size_t j = 0; j + 1 < r; ++j) mult *= p.a[j];
    return {Int(r % 2 == 1 ? -1 : 0), mult};
}

/// The one eigenvalue the level and boundary formulas do not produce,
/// recovered from the zero trace of the adjacency matrix. The boundary
/// term enters with its full multiplicity.
inline Int residual_eigenvalue(const BalancedParams& p) {
    p.validate();
    Int acc = 0;
    for (std::size_t i = 1; i < p.depth(); ++i) acc += level_eigenvalue(p, i) * level_multiplicity(p, i);
    auto [beig, bmult] = boundary_eigenvalue(p);
    acc += beig * bmult;
    return -acc;
}

/// Whole integral spectrum of a balanced cotree in closed form.
struct BalancedSpectrum {
    BalancedParams params;
    std::vector<std::pair<Int, Int>> level_entries;  // (eigenvalue, multiplicity) per level 1..r-1
    std::pair<Int, Int> boundary;
    Int residual;  // eigenvalue; multiplicity 1
    Int n;

    /// Entries merged by eigenvalue. Collisions between levels, boundary
    /// and residual are summed; the named formulas never repeat an
    /// eigenvalue in the worked families, so this is a safety net.
    std::map<Int, Int> multiset() const {
        std::map<Int, Int> out;
        for (auto& [e, m] : level_entries) out[e] += m;
        out[boundary.first] += boundary.second;
        out[residual] += 1;
        return out;
    }
};

inline BalancedSpectrum full_spectrum(const BalancedParams& p) {
    p.validate();
    BalancedSpectrum s;
    s.params = p;
    s.n = 1;
    for (long long a : p.a) s.n *= a;
    for (std::size_t i = 1; i < p.depth(); ++i)
        s.level_entries.emplace_back(level_eigenvalue(p, i), level_multiplicity(p, i));
    s.boundary = boundary_eigenvalue(p);
    s.residual = residual_eigenvalue(p);
    return s;
}

}  // namespace cospec
