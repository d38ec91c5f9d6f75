#pragma once

#include "cospec/cotree.hpp"

#include <deque>
#include <stdexcept>
#include <vector>

namespace cospec {

class NotACograph : public std::runtime_error {
public:
    NotACograph() : std::runtime_error("graph is not a cograph (contains an induced P4)") {}
};

namespace detail {

// Connected components of the subset, in order of smallest contained
// vertex. `complemented` flips every adjacency test.
inline std::vector<std::vector<std::uint32_t>> components(const std::vector<std::uint32_t>& verts,
                                                          const std::vector<char>& adj, std::size_t n,
                                                          bool complemented) {
    std::vector<std::vector<std::uint32_t>> comps;
    std::vector<char> seen(verts.size(), 0);
    for (std::size_t s = 0; s < verts.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::uint32_t> comp;
        std::deque<std::size_t> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            comp.push_back(verts[i]);
            for (std::size_t j = 0; j < verts.size(); ++j) {
                if (seen[j]) continue;
                bool edge = adj[verts[i] * n + verts[j]] != 0;
                if (edge != complemented) {
                    seen[j] = 1;
                    queue.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline std::uint32_t recognize_rec(const std::vector<std::uint32_t>& verts, const std::vector<char>& adj,
                                   std::size_t n, Cotree::Builder& b) {
    if (verts.size() == 1) return b.leaf(verts[0]);
    auto comps = components(verts, adj, n, false);
    if (comps.size() > 1) {
        std::vector<std::uint32_t> kids;
        for (auto& c : comps) kids.push_back(recognize_rec(c, adj, n, b));
        return b.interior(NodeKind::Union, std::move(kids));
    }
    auto cocomps = components(verts, adj, n, true);
    if (cocomps.size() > 1) {
        std::vector<std::uint32_t> kids;
        for (auto& c : cocomps) kids.push_back(recognize_rec(c, adj, n, b));
        return b.interior(NodeKind::Join, std::move(kids));
    }
    throw NotACograph();
}

}  // namespace detail

/// Complement-reducibility recursion: split a disconnected graph into
/// components under a Union node; split a connected graph's complement
/// under a Join node; stall means an induced P4 exists.
///
/// Leaves keep the input graph's vertex numbering, so the expansion of
/// the result has exactly the input's edge set. O(n^3) worst case.
inline Cotree recognize_cograph(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("recognize_cograph: empty graph");
    std::vector<char> adj = g.adjacency_table();
    std::vector<std::uint32_t> verts(g.n);
    for (std::size_t i = 0; i < g.n; ++i) verts[i] = static_cast<std::uint32_t>(i);
    Cotree::Builder b;
    return b.build(detail::recognize_rec(verts, adj, g.n, b));
}

}  // namespace cospec
