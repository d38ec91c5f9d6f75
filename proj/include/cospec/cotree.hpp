#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cospec {

enum class NodeKind : std::uint8_t { Union, Join, Leaf };

inline NodeKind other_kind(NodeKind k) {
    return k == NodeKind::Union ? NodeKind::Join : NodeKind::Union;
}

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Rooted tree of Union / Join interior nodes with typeless leaves.
///
/// Leaves carry the graph's vertex identity. For parsed and generated
/// trees the left-to-right leaf sequence is 0..n-1; recognition preserves
/// the input graph's vertex numbering instead, which may permute that
/// sequence. Immutable once built.
class Cotree {
public:
    struct Node {
        NodeKind kind = NodeKind::Leaf;
        std::vector<std::uint32_t> children;      // empty for leaves
        std::int64_t parent = -1;                 // -1 for the root
        std::int64_t vertex = -1;                 // leaves only
    };

    class Builder {
    public:
        std::uint32_t leaf(std::int64_t vertex = -1) {
            nodes_.push_back(Node{NodeKind::Leaf, {}, -1, vertex});
            return static_cast<std::uint32_t>(nodes_.size() - 1);
        }
        std::uint32_t interior(NodeKind kind, std::vector<std::uint32_t> children) {
            if (kind == NodeKind::Leaf) throw std::invalid_argument("Cotree: interior node cannot be a leaf");
            nodes_.push_back(Node{kind, std::move(children), -1, -1});
            return static_cast<std::uint32_t>(nodes_.size() - 1);
        }
        Cotree build(std::uint32_t root) { return Cotree(std::move(nodes_), root); }

    private:
        std::vector<Node> nodes_;
    };

    const Node& node(std::uint32_t id) const { return nodes_[id]; }
    std::uint32_t root() const { return root_; }
    std::size_t leaf_count() const { return leaves_.size(); }

    /// Leaf node ids in left-to-right order.
    const std::vector<std::uint32_t>& leaves() const { return leaves_; }

    /// Vertex ids in left-to-right leaf order.
    std::vector<std::size_t> leaf_vertices() const {
        std::vector<std::size_t> out;
        out.reserve(leaves_.size());
        for (std::uint32_t id : leaves_) out.push_back(static_cast<std::size_t>(nodes_[id].vertex));
        return out;
    }

    std::size_t depth() const {
        std::size_t best = 0;
        walk_depth(root_, 0, best);
        return best;
    }

    friend bool operator==(const Cotree& a, const Cotree& b) {
        return a.equal_subtree(a.root_, b, b.root_);
    }

private:
    Cotree(std::vector<Node> nodes, std::uint32_t root) : nodes_(std::move(nodes)), root_(root) {
        index_leaves(root_);
        // Leaves either all carry explicit vertex ids (recognition) or none
        // (parsing, generation); in the latter case number them left to right.
        std::size_t tagged = 0;
        for (std::uint32_t id : leaves_)
            if (nodes_[id].vertex >= 0) ++tagged;
        if (tagged == 0) {
            std::int64_t next = 0;
            for (std::uint32_t id : leaves_) nodes_[id].vertex = next++;
        } else if (tagged != leaves_.size()) {
            throw std::invalid_argument("Cotree: either all or no leaves may carry vertex ids");
        }
        validate();
    }

    void index_leaves(std::uint32_t id) {
        Node& nd = nodes_[id];
        if (nd.kind == NodeKind::Leaf) {
            leaves_.push_back(id);
            return;
        }
        for (std::uint32_t c : nd.children) {
            nodes_[c].parent = id;
            index_leaves(c);
        }
    }

    void validate() const {
        std::set<std::int64_t> seen;
        for (std::uint32_t id : leaves_) {
            std::int64_t v = nodes_[id].vertex;
            if (v < 0 || v >= static_cast<std::int64_t>(leaves_.size()) || !seen.insert(v).second)
                throw std::invalid_argument("Cotree: leaf vertices must be a permutation of 0..n-1");
        }
    }

    void walk_depth(std::uint32_t id, std::size_t d, std::size_t& best) const {
        const Node& nd = nodes_[id];
        if (nd.kind == NodeKind::Leaf) {
            best = std::max(best, d);
            return;
        }
        for (std::uint32_t c : nd.children) walk_depth(c, d + 1, best);
    }

    bool equal_subtree(std::uint32_t a, const Cotree& ot, std::uint32_t b) const {
        const Node& na = nodes_[a];
        const Node& nb = ot.nodes_[b];
        if (na.kind != nb.kind) return false;
        if (na.kind == NodeKind::Leaf) return na.vertex == nb.vertex;
        if (na.children.size() != nb.children.size()) return false;
        for (std::size_t i = 0; i < na.children.size(); ++i)
            if (!equal_subtree(na.children[i], ot, nb.children[i])) return false;
        return true;
    }

    std::vector<Node> nodes_;
    std::uint32_t root_ = 0;
    std::vector<std::uint32_t> leaves_;
};

/// Simple undirected graph on vertices 0..n-1, kept as a sorted edge list.
struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v, sorted, unique

    void add_edge(std::uint32_t u, std::uint32_t v) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    void finish() {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (auto& [u, v] : edges)
            if (v >= n) throw std::invalid_argument("Graph: vertex index out of range");
    }

    /// Dense adjacency lookup table, row-major n*n.
    std::vector<char> adjacency_table() const {
        std::vector<char> adj(n * n, 0);
        for (auto& [u, v] : edges) {
            adj[u * n + v] = 1;
            adj[v * n + u] = 1;
        }
        return adj;
    }

    friend bool operator==(const Graph& a, const Graph& b) = default;
};

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
}

inline std::uint32_t parse_expr(std::string_view s, std::size_t& i, Cotree::Builder& b) {
    skip_ws(s, i);
    if (i >= s.size()) throw ParseError("unexpected end of input", i);
    if (s[i] == 'L') {
        ++i;
        return b.leaf();
    }
    if (s[i] != '(') throw ParseError(std::string("expected 'L' or '(', found '") + s[i] + "'", i);
    std::size_t open = i++;
    skip_ws(s, i);
    if (i >= s.size()) throw ParseError("unexpected end of input after '('", i);
    NodeKind kind;
    if (s[i] == 'J') kind = NodeKind::Join;
    else if (s[i] == 'U') kind = NodeKind::Union;
    else throw ParseError(std::string("expected 'J' or 'U', found '") + s[i] + "'", i);
    ++i;
    std::vector<std::uint32_t> children;
    while (true) {
        skip_ws(s, i);
        if (i >= s.size()) throw ParseError("unbalanced parenthesis", open);
        if (s[i] == ')') {
            ++i;
            break;
        }
        children.push_back(parse_expr(s, i, b));
    }
    if (children.size() < 2)
        throw ParseError("interior node needs at least two children", open);
    return b.interior(kind, std::move(children));
}

}  // namespace detail

namespace detail {

struct Shape {
    NodeKind kind = NodeKind::Leaf;
    std::int64_t vertex = -1;
    std::vector<Shape> children;
};

inline Shape to_shape(const Cotree& t, std::uint32_t id) {
    const auto& nd = t.node(id);
    Shape s;
    s.kind = nd.kind;
    s.vertex = nd.vertex;
    for (std::uint32_t c : nd.children) s.children.push_back(to_shape(t, c));
    return s;
}

inline Shape normalize_shape(Shape s) {
    if (s.kind == NodeKind::Leaf) return s;
    std::vector<Shape> kids;
    kids.reserve(s.children.size());
    for (auto& c : s.children) kids.push_back(normalize_shape(std::move(c)));
    if (kids.size() == 1) return std::move(kids[0]);  // unary splice
    std::vector<Shape> flat;
    for (auto& k : kids) {
        if (k.kind == s.kind)  // same-kind merge
            for (auto& gk : k.children) flat.push_back(std::move(gk));
        else
            flat.push_back(std::move(k));
    }
    s.children = std::move(flat);
    return s;
}

inline std::uint32_t build_shape(const Shape& s, Cotree::Builder& b) {
    if (s.kind == NodeKind::Leaf) return b.leaf(s.vertex);
    std::vector<std::uint32_t> kids;
    kids.reserve(s.children.size());
    for (const auto& c : s.children) kids.push_back(build_shape(c, b));
    return b.interior(s.kind, std::move(kids));
}

}  // namespace detail

/// Splices out unary interior nodes and merges same-kind parent/child
/// pairs. Leaf identity and the expansion are unchanged; idempotent.
inline Cotree normalize(const Cotree& t) {
    detail::Shape s = detail::normalize_shape(detail::to_shape(t, t.root()));
    Cotree::Builder b;
    return b.build(detail::build_shape(s, b));
}

/// Grammar: expr := "L" | "(" ("J"|"U") expr expr+ ")", whitespace-insensitive.
/// Returns the normalized cotree; leaves are numbered in textual order.
inline Cotree parse_cotree(std::string_view text) {
    Cotree::Builder b;
    std::size_t i = 0;
    std::uint32_t root = detail::parse_expr(text, i, b);
    detail::skip_ws(text, i);
    if (i != text.size()) throw ParseError("trailing input", i);
    return normalize(b.build(root));
}

inline std::string serialize_cotree(const Cotree& t) {
    std::string out;
    auto rec = [&](auto&& self, std::uint32_t id) -> void {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::Leaf) {
            out += 'L';
            return;
        }
        out += '(';
        out += nd.kind == NodeKind::Join ? 'J' : 'U';
        for (std::uint32_t c : nd.children) {
            out += ' ';
            self(self, c);
        }
        out += ')';
    };
    rec(rec, t.root());
    return out;
}

/// Two leaves are adjacent iff their lowest common ancestor is a Join node.
inline Graph expand_to_graph(const Cotree& t) {
    Graph g;
    g.n = t.leaf_count();
    // Post-order merge of vertex lists; Join nodes emit all cross pairs.
    auto rec = [&](auto&& self, std::uint32_t id) -> std::vector<std::uint32_t> {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::Leaf) return {static_cast<std::uint32_t>(nd.vertex)};
        std::vector<std::uint32_t> mine;
        for (std::uint32_t c : nd.children) {
            std::vector<std::uint32_t> sub = self(self, c);
            if (nd.kind == NodeKind::Join)
                for (std::uint32_t u : mine)
                    for (std::uint32_t v : sub) g.add_edge(u, v);
            mine.insert(mine.end(), sub.begin(), sub.end());
        }
        return mine;
    };
    rec(rec, t.root());
    g.finish();
    return g;
}

/// Parameters (a1,...,ar) of a depth-r balanced cotree with uniform
/// branching and all leaves at the last level. Each ai >= 2 except the
/// degenerate r = 1 case, which encodes the complete graph and only
/// needs a1 >= 1.
struct BalancedParams {
    std::vector<long long> a;

    std::size_t depth() const { return a.size(); }
    void validate() const {
        if (a.empty()) throw std::invalid_argument("BalancedParams: empty parameter list");
        if (a.size() == 1) {
            if (a[0] < 1) throw std::invalid_argument("BalancedParams: a1 must be >= 1");
            return;
        }
        for (long long v : a)
            if (v < 2) throw std::invalid_argument("BalancedParams: every ai must be >= 2");
    }

    friend bool operator==(const BalancedParams&, const BalancedParams&) = default;
};

/// Root is Join; level-i interior nodes all have a_{i+1} children and
/// alternate kinds by level parity. Leaves only at the last level.
inline Cotree balanced_cotree(const BalancedParams& p) {
    p.validate();
    Cotree::Builder b;
    auto rec = [&](auto&& self, std::size_t level) -> std::uint32_t {
        if (level == p.a.size()) return b.leaf();
        NodeKind kind = (level % 2 == 0) ? NodeKind::Join : NodeKind::Union;
        std::vector<std::uint32_t> kids;
        kids.reserve(static_cast<std::size_t>(p.a[level]));
        for (long long j = 0; j < p.a[level]; ++j) kids.push_back(self(self, level + 1));
        if (kids.size() == 1) return kids[0];  // r = 1 with a1 = 1 is a bare leaf
        return b.interior(kind, std::move(kids));
    };
    return b.build(rec(rec, 0));
}

/// One "u v" pair per line, 0-indexed; '#' starts a comment. The vertex
/// count is max index + 1.
inline Graph read_edge_list(std::istream& in) {
    Graph g;
    std::string line;
    std::size_t lineno = 0;
    long long max_vertex = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        long long u, v;
        if (!(ss >> u)) continue;  // blank or comment-only line
        if (!(ss >> v)) throw std::invalid_argument("edge list: missing endpoint on line " + std::to_string(lineno));
        long long extra;
        if (ss >> extra) throw std::invalid_argument("edge list: trailing tokens on line " + std::to_string(lineno));
        if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative vertex on line " + std::to_string(lineno));
        if (u == v) throw std::invalid_argument("edge list: self-loop on line " + std::to_string(lineno));
        g.add_edge(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
        max_vertex = std::max({max_vertex, u, v});
    }
    if (max_vertex < 0) throw std::invalid_argument("edge list: no edges");
    g.n = static_cast<std::size_t>(max_vertex + 1);
    g.finish();
    return g;
}

inline Graph read_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

}  // namespace cospec
