#pragma once

#include "cospec/cotree.hpp"
#include "cospec/rational.hpp"

#include <stdexcept>
#include <vector>

namespace cospec {

/// Balanced supergraph shape for a connected cograph: the target embeds
/// as an induced subgraph of the completed balanced cotree's expansion.
struct CompletionResult {
    BalancedParams params;
    Cotree completed;                    // == balanced_cotree(params)
    std::vector<std::size_t> embedding;  // target vertex -> completed vertex
};

namespace detail {

inline void max_child_counts(const Cotree& t, std::uint32_t id, std::size_t level,
                             std::vector<long long>& a) {
    const auto& nd = t.node(id);
    if (nd.kind == NodeKind::Leaf) return;
    a[level] = std::max(a[level], static_cast<long long>(nd.children.size()));
    for (std::uint32_t c : nd.children) max_child_counts(t, c, level + 1, a);
}

}  // namespace detail

/// Branching parameters of the completion: every leaf is first pushed to
/// the deepest level along a path of alternating single-child nodes, and
/// a_i is then the largest child count seen at level i-1. Spliced path
/// nodes are unary, so only the original interior nodes matter, and a
/// deepest root-to-leaf path guarantees a_i >= 2 throughout.
inline BalancedParams completion_params(const Cotree& t) {
    if (t.node(t.root()).kind != NodeKind::Join)
        throw std::domain_error("balance_completion: requires a connected cograph (Join root); "
                                "process the components of a Union root separately");
    std::size_t r = t.depth();
    std::vector<long long> a(r, 0);
    detail::max_child_counts(t, t.root(), 0, a);
    BalancedParams p{a};
    p.validate();
    return p;
}

namespace detail {

// Leaf slots of the completed tree, walked in parallel with the target:
// child j of a level-l node owns the block of `stride[l+1]` slots starting
// at offset + j*stride[l+1]; a leaf above the last level rides the first
// slot of its spliced path all the way down. Padding fills the remaining
// slots and needs no bookkeeping here.
inline void embed_rec(const Cotree& t, std::uint32_t id, std::size_t level, std::size_t offset,
                      const std::vector<std::size_t>& stride, std::vector<std::size_t>& embedding) {
    const auto& nd = t.node(id);
    if (nd.kind == NodeKind::Leaf) {
        embedding[static_cast<std::size_t>(nd.vertex)] = offset;
        return;
    }
    for (std::size_t j = 0; j < nd.children.size(); ++j)
        embed_rec(t, nd.children[j], level + 1, offset + j * stride[level + 1], stride, embedding);
}

}  // namespace detail

/// Full completion with the leaf embedding. Materializes the completed
/// tree; prefer completion_params when only the shape is needed.
inline CompletionResult balance_completion(const Cotree& t) {
    BalancedParams p = completion_params(t);
    std::size_t r = p.depth();
    std::vector<std::size_t> stride(r + 1, 1);  // stride[l] = leaves under a level-l node
    for (std::size_t l = r; l >= 1; --l) stride[l - 1] = stride[l] * static_cast<std::size_t>(p.a[l - 1]);
    std::vector<std::size_t> embedding(t.leaf_count());
    detail::embed_rec(t, t.root(), 0, 0, stride, embedding);
    return CompletionResult{p, balanced_cotree(p), std::move(embedding)};
}

}  // namespace cospec
