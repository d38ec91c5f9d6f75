#pragma once

#include "cospec/cotree.hpp"
#include "cospec/diagonalize.hpp"  // LocatedItem; nothing else is used from it
#include "cospec/inertia.hpp"
#include "cospec/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace cospec {

/// Dense symmetric matrix of exact rationals. Ground-truth side of the
/// inertia cross-checks; deliberately independent of the cotree path.
class DenseSymmetric {
public:
    explicit DenseSymmetric(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t size() const { return n_; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Rational v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = std::move(v);
    }

private:
    std::size_t n_;
    std::vector<Rational> a_;
};

/// 0/1 adjacency matrix with zero diagonal.
inline DenseSymmetric adjacency_matrix(const Graph& g) {
    DenseSymmetric m(g.n);
    for (auto& [u, v] : g.edges) m.set(u, v, Rational(1));
    return m;
}

/// Inertia of mat + shift*I by symmetric Gaussian congruence elimination.
/// A zero pivot whose row is nonzero is repaired by adding (or, if that
/// also lands on zero, subtracting) the partner row and column first;
/// both transforms are congruences, so the counts are exact.
///
/// Only the upper triangle is maintained: the Schur update touches
/// entries (r, c) with c >= r > i and reads row i, which this sweep never
/// modifies again.
inline InertiaTriple exact_inertia(const DenseSymmetric& mat, const Rational& shift) {
    std::size_t n = mat.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) m[i][j] = mat.at(i, j);
        m[i][i] += shift;
    }

    InertiaTriple out;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i].is_zero()) {
            std::size_t j = i + 1;
            while (j < n && m[i][j].is_zero()) ++j;
            if (j == n) {
                ++out.n_zero;
                continue;
            }
            // Row+column addition lands the diagonal on 2*m[i][j] + m[j][j];
            // if the partner row cancels that exactly, subtraction cannot.
            Rational twice = Rational(2) * m[i][j];
            bool subtract = (twice + m[j][j]).is_zero();
            Rational f = subtract ? Rational(-1) : Rational(1);
            Rational new_diag = (subtract ? -twice : twice) + m[j][j];
            for (std::size_t k = i + 1; k < n; ++k) m[i][k] += f * (k >= j ? m[j][k] : m[k][j]);
            m[i][i] = std::move(new_diag);
        }
        const Rational pivot = m[i][i];
        if (pivot.sign() > 0) ++out.n_plus;
        else ++out.n_minus;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m[i][r].is_zero()) continue;
            Rational f = m[i][r] / pivot;
            for (std::size_t c = r; c < n; ++c) m[r][c] -= f * m[i][c];
        }
    }
    return out;
}

/// Eigenvalue extraction by bisection on exact inertia counts: the number
/// of eigenvalues below x equals n_minus of mat - xI. Same output contract
/// as locate_eigenvalues; exact hits are detected by n_zero > 0 at probes.
inline std::vector<LocatedItem> bisect_eigenvalues(const DenseSymmetric& mat,
                                                   const Rational& tol = default_locate_tolerance()) {
    if (!(tol > 0)) throw std::domain_error("bisect_eigenvalues: tolerance must be positive");
    std::size_t n = mat.size();
    std::vector<LocatedItem> items;
    if (n == 0) return items;

    std::map<Rational, std::pair<std::size_t, std::size_t>> memo;  // probe -> (less, equal)
    auto probe = [&](const Rational& x) {
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        InertiaTriple in = exact_inertia(mat, -x);
        auto le = std::make_pair(in.n_minus, in.n_zero);
        memo.emplace(x, le);
        return le;
    };

    // Gershgorin-style bracket: every |entry| sum is < row_bound, padded to
    // a power-of-two width so dyadic midpoints pass through the integers.
    Rational bound(1);
    for (std::size_t i = 0; i < n; ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = mat.at(i, j);
            row += v.sign() < 0 ? -v : v;
        }
        row += Rational(1);
        if (row > bound) bound = row;
    }
    Int width = 2;
    while (Rational(width) < Rational(2) * bound) width <<= 1;
    Rational lo = -Rational(width) / Rational(2);
    Rational hi = Rational(width) / Rational(2);

    struct Seg {
        Rational lo, hi;
        std::size_t count;
        std::size_t less_eq_lo;
    };
    auto [llo, elo] = probe(lo);
    auto [lhi, ehi] = probe(hi);
    (void)ehi;
    std::vector<Seg> stack;
    if (std::size_t total = lhi - llo - elo; total > 0) stack.push_back({lo, hi, total, llo + elo});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        Rational mid = (s.lo + s.hi) / Rational(2);
        auto [lm, em] = probe(mid);
        if (em > 0) items.push_back({true, mid, {}, {}, Int(em)});
        std::size_t left = lm - s.less_eq_lo;
        std::size_t right = s.count - left - em;
        Rational half = mid - s.lo;
        if (left > 0) {
            if (half <= tol) items.push_back({false, {}, s.lo, mid, Int(left)});
            else stack.push_back({s.lo, mid, left, s.less_eq_lo});
        }
        if (right > 0) {
            if (half <= tol) items.push_back({false, {}, mid, s.hi, Int(right)});
            else stack.push_back({mid, s.hi, right, lm + em});
        }
    }
    std::sort(items.begin(), items.end(), [](const LocatedItem& a, const LocatedItem& b) {
        Rational ka = a.exact ? a.value : a.lo;
        Rational kb = b.exact ? b.value : b.lo;
        return ka < kb;
    });
    return items;
}

}  // namespace cospec
