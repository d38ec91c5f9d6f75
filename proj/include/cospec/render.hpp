#pragma once

#include "cospec/balanced_spectrum.hpp"
#include "cospec/cotree.hpp"
#include "cospec/diagonalize.hpp"
#include "cospec/interlacing.hpp"
#include "cospec/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace cospec {

/// Machine renderings. Integers are emitted as JSON numbers while they
/// fit in 64 bits and as decimal strings beyond that; rationals are
/// always {"num","den"} pairs, never floating point.
inline nlohmann::json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline nlohmann::json rational_to_json(const Rational& r) {
    return {{"num", int_to_json(r.num())}, {"den", int_to_json(r.den())}};
}

inline nlohmann::json cotree_to_json(const Cotree& t) {
    auto rec = [&](auto&& self, std::uint32_t id) -> nlohmann::json {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::Leaf) return {{"kind", "leaf"}, {"vertex", nd.vertex}};
        nlohmann::json kids = nlohmann::json::array();
        for (std::uint32_t c : nd.children) kids.push_back(self(self, c));
        return {{"kind", nd.kind == NodeKind::Join ? "join" : "union"}, {"children", std::move(kids)}};
    };
    return rec(rec, t.root());
}

inline nlohmann::json spectrum_to_json(const std::map<Int, Int>& spectrum) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& [e, m] : spectrum)
        out.push_back({{"eigenvalue", int_to_json(e)}, {"multiplicity", int_to_json(m)}});
    return out;
}

inline nlohmann::json located_to_json(const std::vector<LocatedItem>& items) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& it : items) {
        if (it.exact)
            out.push_back({{"exact", rational_to_json(it.value)}, {"multiplicity", int_to_json(it.count)}});
        else
            out.push_back({{"lo", rational_to_json(it.lo)},
                           {"hi", rational_to_json(it.hi)},
                           {"count", int_to_json(it.count)}});
    }
    return out;
}

inline nlohmann::json bounds_to_json(const EigenBounds& b) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t k = 1; k <= b.m; ++k) {
        const Bound& bd = b.bounds[k - 1];
        out.push_back({{"k", k},
                       {"lo", rational_to_json(bd.lo)},
                       {"hi", rational_to_json(bd.hi)},
                       {"lo_open", bd.lo_open},
                       {"hi_open", bd.hi_open}});
    }
    return out;
}

/// "[lo, hi]" with parentheses on open ends, e.g. "(0, 1]".
inline std::string bound_to_text(const Bound& b) {
    std::string s;
    s += b.lo_open ? '(' : '[';
    s += b.lo.str();
    s += ", ";
    s += b.hi.str();
    s += b.hi_open ? ')' : ']';
    return s;
}

}  // namespace cospec
