#pragma once

#include "cospec/cotree.hpp"

#include <random>
#include <vector>

namespace cospec {

struct RandomCotreeOptions {
    std::size_t min_leaves = 1;
    std::size_t max_leaves = 64;
    std::size_t max_children = 4;
    bool connected = false;  // force a Join root
};

namespace detail {

inline std::uint32_t random_subtree(std::mt19937_64& rng, NodeKind kind, std::size_t budget,
                                    std::size_t max_children, Cotree::Builder& b) {
    if (budget == 1) return b.leaf();
    std::size_t max_c = std::min(max_children, budget);
    std::uniform_int_distribution<std::size_t> pick(2, max_c);
    std::size_t c = pick(rng);
    // Split the leaf budget into c parts of at least one leaf each.
    std::vector<std::size_t> parts(c, 1);
    for (std::size_t extra = budget - c; extra > 0; --extra) {
        std::uniform_int_distribution<std::size_t> slot(0, c - 1);
        ++parts[slot(rng)];
    }
    std::vector<std::uint32_t> kids;
    kids.reserve(c);
    for (std::size_t p : parts) kids.push_back(random_subtree(rng, other_kind(kind), p, max_children, b));
    return b.interior(kind, std::move(kids));
}

}  // namespace detail

/// Uniform-ish normalized cotree: kinds alternate by construction and
/// every interior node gets at least two children, so no normalization
/// pass is needed afterwards. Deterministic for a given generator state.
inline Cotree random_cotree(std::mt19937_64& rng, const RandomCotreeOptions& opt = {}) {
    std::uniform_int_distribution<std::size_t> size(std::max<std::size_t>(1, opt.min_leaves), opt.max_leaves);
    std::size_t n = size(rng);
    if (opt.connected && n < 2) n = 2;
    NodeKind root = NodeKind::Join;
    if (!opt.connected && n > 1) {
        std::bernoulli_distribution join(0.5);
        root = join(rng) ? NodeKind::Join : NodeKind::Union;
    }
    Cotree::Builder b;
    return b.build(detail::random_subtree(rng, root, n, opt.max_children, b));
}

}  // namespace cospec
