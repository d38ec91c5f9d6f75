#pragma once

#include "cospec/cotree.hpp"
#include "cospec/inertia.hpp"
#include "cospec/rational.hpp"

#include <cassert>
#include <map>
#include <optional>
#include <vector>

namespace cospec {

/// Diagonal of a matrix congruent to A + xI, with its sign census.
/// Only the inertia is contractual; the diagonal itself depends on
/// processing order and is exposed for inspection.
struct DiagResult {
    std::vector<Rational> diagonal;
    InertiaTriple inertia;
};

namespace detail {

// One elimination step on a (co)duplicate pair. `alpha` is the incoming
// value (row being removed), `beta` the running survivor. Appends removed
// values to `diag`; returns the survivor, or nothing when both rows were
// finalized at once.
inline std::optional<Rational> process_pair(NodeKind kind, const Rational& alpha, const Rational& beta,
                                            std::vector<Rational>& diag) {
    if (kind == NodeKind::Join) {
        Rational s = alpha + beta;
        if (s != 2) {
            diag.push_back(s - Rational(2));
            return (alpha * beta - Rational(1)) / (s - Rational(2));
        }
        if (beta == 1) {
            diag.push_back(Rational(0));
            return Rational(1);
        }
        Rational d = Rational(1) - beta;
        diag.push_back(Rational(1));
        diag.push_back(-(d * d));
        return std::nullopt;
    }
    Rational s = alpha + beta;
    if (!s.is_zero()) {
        diag.push_back(s);
        return (alpha * beta) / s;
    }
    if (beta.is_zero()) {
        diag.push_back(Rational(0));
        return Rational(0);
    }
    diag.push_back(beta);
    diag.push_back(-beta);
    return std::nullopt;
}

// Closed forms for a group of m equal values y under one parent: the m-1
// removed values are (j+1)/j*(y-1) (Join) or (j+1)/j*y (Union) for
// j = 1..m-1, and the survivor is (y+m-1)/m resp. y/m. Requires y != 1
// for Join and y != 0 for Union.
inline Rational process_uniform_batch(NodeKind kind, const Rational& y, std::size_t m,
                                      std::vector<Rational>& diag) {
    for (std::size_t j = 1; j < m; ++j) {
        Rational factor(Int(j + 1), Int(j));
        diag.push_back(kind == NodeKind::Join ? factor * (y - Rational(1)) : factor * y);
    }
    Rational count(Int(m), Int(1));
    return kind == NodeKind::Join ? (y + Rational(Int(m - 1))) / count : y / count;
}

// Reduces one subtree to at most one surviving value. Children are
// processed first (deepest pairs first), then this node's collected
// values fold left to right; a survivor reattaches to the grandparent.
inline std::optional<Rational> reduce(const Cotree& t, std::uint32_t id, const Rational& x,
                                      std::vector<Rational>& diag) {
    const auto& nd = t.node(id);
    if (nd.kind == NodeKind::Leaf) return x;
    std::vector<Rational> values;
    values.reserve(nd.children.size());
    for (std::uint32_t c : nd.children) {
        auto v = reduce(t, c, x, diag);
        if (v) values.push_back(std::move(*v));
    }
    if (values.empty()) return std::nullopt;
    if (values.size() == 1) return values[0];

    bool uniform = true;
    for (std::size_t i = 1; i < values.size() && uniform; ++i) uniform = values[i] == values[0];
    bool degenerate = nd.kind == NodeKind::Join ? values[0] == 1 : values[0].is_zero();
    if (uniform && !degenerate) return process_uniform_batch(nd.kind, values[0], values.size(), diag);

    std::optional<Rational> survivor;
    for (const Rational& v : values) {
        if (!survivor) {
            survivor = v;
            continue;
        }
        survivor = process_pair(nd.kind, v, *survivor, diag);
    }
    return survivor;
}

}  // namespace detail

/// Congruence-diagonalizes A + xI along the cotree in O(n) arithmetic
/// steps. Total for every input.
inline DiagResult diagonalize_shifted(const Cotree& t, const Rational& x) {
    DiagResult r;
    r.diagonal.reserve(t.leaf_count());
    auto survivor = detail::reduce(t, t.root(), x, r.diagonal);
    if (survivor) r.diagonal.push_back(std::move(*survivor));
    assert(r.diagonal.size() == t.leaf_count());
    for (const Rational& d : r.diagonal) {
        int s = d.sign();
        if (s > 0) ++r.inertia.n_plus;
        else if (s < 0) ++r.inertia.n_minus;
        else ++r.inertia.n_zero;
    }
    return r;
}

/// Exact counts of adjacency eigenvalues >, =, < lambda.
inline CountTriple eigenvalue_counts(const Cotree& t, const Rational& lambda) {
    InertiaTriple in = diagonalize_shifted(t, -lambda).inertia;
    return {in.n_plus, in.n_zero, in.n_minus};
}

inline std::size_t eigenvalue_multiplicity(const Cotree& t, const Rational& lambda) {
    return eigenvalue_counts(t, lambda).equal;
}

/// Integer eigenvalues with exact multiplicities, plus the number of
/// eigenvalues that are not integers.
struct SpectrumMultiset {
    std::map<Int, Int> integral;
    Int residual_count = 0;
    Int n = 0;
};

/// Scans every integer in [-(n-1), n-1]; the spectral radius of an
/// n-vertex graph is at most n-1, so nothing integral lies outside.
inline SpectrumMultiset integer_spectrum(const Cotree& t) {
    SpectrumMultiset out;
    long long n = static_cast<long long>(t.leaf_count());
    out.n = n;
    Int found = 0;
    for (long long k = -(n - 1); k <= n - 1 && found < n; ++k) {
        std::size_t mult = eigenvalue_multiplicity(t, Rational(k));
        if (mult > 0) {
            out.integral[Int(k)] = Int(mult);
            found += mult;
        }
    }
    out.residual_count = Int(n) - found;
    return out;
}

inline bool is_integral(const Cotree& t) { return integer_spectrum(t).residual_count == 0; }

/// Exact integer eigenvalue, or an isolating open interval for a cluster
/// of non-integral ones. `count` is the multiplicity either way.
struct LocatedItem {
    bool exact = false;
    Rational value;      // exact items
    Rational lo, hi;     // open interval, exact items leave these empty
    Int count = 0;

    friend bool operator==(const LocatedItem&, const LocatedItem&) = default;
};

inline Rational default_locate_tolerance() {
    return Rational(Int(1), Int(1) << 40);
}

/// Sorted, disjoint items covering the whole spectrum. Bisection runs on
/// dyadic midpoints only, which keeps coordinate growth bounded; dyadic
/// non-integers are never eigenvalues (rational eigenvalues of an integer
/// matrix are integers), so interval counts at them are clean.
inline std::vector<LocatedItem> locate_eigenvalues(const Cotree& t,
                                                   const Rational& tol = default_locate_tolerance()) {
    if (!(tol > 0)) throw std::domain_error("locate_eigenvalues: tolerance must be positive");
    long long n = static_cast<long long>(t.leaf_count());
    std::vector<LocatedItem> items;

    // less(k) at integer probes, reused for the gap counts below.
    std::map<long long, CountTriple> at;
    for (long long k = -(n - 1); k <= n - 1; ++k) {
        CountTriple c = eigenvalue_counts(t, Rational(k));
        at[k] = c;
        if (c.equal > 0) items.push_back({true, Rational(k), {}, {}, Int(c.equal)});
    }

    struct Seg {
        Rational lo, hi;
        std::size_t count;
        std::size_t less_lo_eq;  // eigenvalues <= lo
    };
    std::vector<Seg> stack;
    for (long long k = -(n - 1); k < n - 1; ++k) {
        const CountTriple& a = at[k];
        const CountTriple& b = at[k + 1];
        std::size_t inside = b.less - a.less - a.equal;
        if (inside > 0) stack.push_back({Rational(k), Rational(k + 1), inside, a.less + a.equal});
    }
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.hi - s.lo <= tol) {
            items.push_back({false, {}, s.lo, s.hi, Int(s.count)});
            continue;
        }
        Rational mid = (s.lo + s.hi) / Rational(2);
        CountTriple cm = eigenvalue_counts(t, mid);
        std::size_t left = cm.less - s.less_lo_eq;  // mid is never an eigenvalue
        std::size_t right = s.count - left;
        if (right > 0) stack.push_back({mid, s.hi, right, cm.less + cm.equal});
        if (left > 0) stack.push_back({s.lo, mid, left, s.less_lo_eq});
    }
    std::sort(items.begin(), items.end(), [](const LocatedItem& a, const LocatedItem& b) {
        Rational ka = a.exact ? a.value : a.lo;
        Rational kb = b.exact ? b.value : b.lo;
        return ka < kb;
    });
    return items;
}

}  // namespace cospec
