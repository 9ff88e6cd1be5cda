#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "thomp/group.hpp"

namespace thomp {

/// Three panels side by side: the tree diagram on its leaf line (regions
/// labelled with strip colors when p is given), the plane graph B, and the
/// link diagram with the under-strand broken at every crossing. d must be a
/// reduced binary diagram with at least one caret.
std::string render_svg(TreeDiagram const& d, std::optional<std::uint64_t> p = std::nullopt,
                       bool allow_nonreduced = false);

}  // namespace thomp
