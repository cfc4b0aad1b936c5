#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "eqcohom/flag.hpp"
#include "eqcohom/graded_rep.hpp"

namespace eqcohom {

// Largest N accepted by the point-zN builtin.  The Koszul complex on N
// operators has 2^N summand columns, so an unbounded N is an easy way to
// request an absurd amount of work by typo.
inline constexpr std::size_t kMaxBuiltinOps = 30;

namespace detail {

// "point-zN" -> N; anything else -> nullopt.
inline std::optional<std::size_t> parse_point_name(const std::string& name) {
    const std::string prefix = "point-z";
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    if (first == last) return std::nullopt;
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    if (n > kMaxBuiltinOps) return std::nullopt;
    return n;
}

}  // namespace detail

// Named example inputs.
//   f8-z3     three commuting symmetries of the rank-7 line-class space,
//             plus the trivial degree-0 line (the worked flag example)
//   point-zN  N operators acting trivially on a single degree-0 line
//             (N a nonnegative integer, e.g. point-z3)
//   circle-rot one operator acting trivially on one line in degree 0 and
//             one in degree 1 (a rotation is homotopic to the identity,
//             so the induced action is trivial)
inline std::optional<GradedRep> builtin_rep(const std::string& name) {
    if (name == "f8-z3") return f8_z3();
    if (name == "circle-rot") {
        return trivial_rep(1, {{0, 1}, {1, 1}}, /*connected=*/true);
    }
    if (auto n = detail::parse_point_name(name)) {
        return trivial_rep(*n, {{0, 1}}, /*connected=*/true);
    }
    return std::nullopt;
}

inline std::vector<std::string> builtin_names() {
    return {"f8-z3", "point-zN (N = 0.." + std::to_string(kMaxBuiltinOps) +
                ", e.g. point-z3)",
            "circle-rot"};
}

}  // namespace eqcohom
