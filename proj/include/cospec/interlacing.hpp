#pragma once

#include "cospec/balanced_spectrum.hpp"
#include "cospec/completion.hpp"
#include "cospec/cotree.hpp"
#include "cospec/diagonalize.hpp"
#include "cospec/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace cospec {

/// Certified interval for one eigenvalue, endpoints individually open or
/// closed so that statements like "0 < beta <= 1" survive rendering.
struct Bound {
    Rational lo, hi;
    bool lo_open = false;
    bool hi_open = false;

    bool contains(const Rational& v) const {
        if (v < lo || (v == lo && lo_open)) return false;
        if (v > hi || (v == hi && hi_open)) return false;
        return true;
    }
    bool degenerate() const { return lo == hi && !lo_open && !hi_open; }

    friend bool operator==(const Bound&, const Bound&) = default;
};

/// Per-index intervals for the eigenvalues beta_1 >= ... >= beta_m of the
/// target graph.
struct EigenBounds {
    std::size_t m = 0;
    std::vector<Bound> bounds;  // bounds[k-1] holds beta_k
};

/// Principal-submatrix interlacing: with the host spectrum sorted as
/// lambda_1 >= ... >= lambda_n, an order-m induced subgraph satisfies
/// lambda_k >= beta_k >= lambda_{k+n-m}, closed on both ends. The host
/// spectrum stays a multiset throughout; completions can be huge.
inline EigenBounds interlace(const std::map<Int, Int>& spectrum, std::size_t m) {
    Int n = 0;
    for (auto& [e, c] : spectrum) n += c;
    if (Int(m) >= n) throw std::domain_error("interlace: submatrix order must be smaller than the host order");
    auto lambda_at = [&](Int pos) {  // descending order, 1-based
        Int acc = 0;
        for (auto it = spectrum.rbegin(); it != spectrum.rend(); ++it) {
            acc += it->second;
            if (pos <= acc) return Rational(it->first);
        }
        throw std::logic_error("interlace: position past the host order");
    };
    EigenBounds out;
    out.m = m;
    out.bounds.reserve(m);
    for (std::size_t k = 1; k <= m; ++k)
        out.bounds.push_back(Bound{lambda_at(Int(k) + n - m), lambda_at(Int(k)), false, false});
    return out;
}

namespace detail {

// Narrow `b` to its intersection with [lo, hi] (respecting openness);
// throws if the result is empty, which only an unsound input can cause.
inline void intersect_lo(Bound& b, const Rational& lo, bool open) {
    if (lo > b.lo || (lo == b.lo && open && !b.lo_open)) {
        b.lo = lo;
        b.lo_open = open;
    }
}
inline void intersect_hi(Bound& b, const Rational& hi, bool open) {
    if (hi < b.hi || (hi == b.hi && open && !b.hi_open)) {
        b.hi = hi;
        b.hi_open = open;
    }
}
inline void check_nonempty(const Bound& b, std::size_t k) {
    if (b.lo > b.hi || (b.lo == b.hi && (b.lo_open || b.hi_open)))
        throw std::domain_error("refine: bound " + std::to_string(k) +
                                " is inconsistent with the exact eigenvalue counts");
}

}  // namespace detail

/// Narrows interlacing bounds with three exact facts about the target
/// cograph: the eigenvalue counts at 0, the counts at -1, and the absence
/// of cograph eigenvalues inside (-1, 0). Sorted counts pin each index to
/// one of the regions > 0, = 0, = -1, or < -1, and every bound is
/// intersected with its region. Never widens; never reopens a closed end.
inline EigenBounds refine(const EigenBounds& in, const Cotree& t) {
    if (in.m != t.leaf_count())
        throw std::invalid_argument("refine: bound count does not match the target order");
    CountTriple at_zero = eigenvalue_counts(t, Rational(0));
    CountTriple at_minus_one = eigenvalue_counts(t, Rational(-1));
    // No eigenvalue lies in (-1, 0), so everything below 0 is at most -1.
    if (at_minus_one.greater != at_zero.greater + at_zero.equal)
        throw std::logic_error("refine: counts expose an eigenvalue inside (-1, 0)");

    EigenBounds out = in;
    for (std::size_t k = 1; k <= in.m; ++k) {
        Bound& b = out.bounds[k - 1];
        if (k <= at_zero.greater) {
            detail::intersect_lo(b, Rational(0), true);
        } else if (k <= at_zero.greater + at_zero.equal) {
            detail::intersect_lo(b, Rational(0), false);
            detail::intersect_hi(b, Rational(0), false);
        } else if (k <= at_minus_one.greater + at_minus_one.equal) {
            detail::intersect_lo(b, Rational(-1), false);
            detail::intersect_hi(b, Rational(-1), false);
        } else {
            detail::intersect_hi(b, Rational(-1), true);
        }
        detail::check_nonempty(b, k);
    }
    return out;
}

/// Completion parameters, the closed-form host spectrum, and refined
/// per-index bounds for a connected cograph. When the target is already
/// balanced the host equals the target and every bound is the exact
/// eigenvalue.
struct SpectrumEstimate {
    BalancedParams params;
    EigenBounds bounds;
    Int completion_order = 0;
};

inline SpectrumEstimate estimate_spectrum(const Cotree& t) {
    BalancedParams params = completion_params(t);  // rejects Union roots
    BalancedSpectrum host = full_spectrum(params);
    std::size_t m = t.leaf_count();

    EigenBounds raw;
    if (Int(m) == host.n) {
        raw.m = m;
        std::map<Int, Int> ms = host.multiset();
        for (auto it = ms.rbegin(); it != ms.rend(); ++it)
            for (Int c = 0; c < it->second; ++c)
                raw.bounds.push_back(Bound{Rational(it->first), Rational(it->first), false, false});
    } else {
        raw = interlace(host.multiset(), m);
    }
    return SpectrumEstimate{params, refine(raw, t), host.n};
}

}  // namespace cospec
