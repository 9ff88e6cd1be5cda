#pragma once

// The `thomp` command line, callable in-process.
//
// Exit codes: 0 success (or member / colorable), 1 negative verdict or a
// rejected element, 2 usage or parse error.

#include <iosfwd>
#include <string>
#include <vector>

#include "thomp/group.hpp"

namespace thomp {

inline constexpr int kExitOk       = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage    = 2;

/// args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

/// Fixture name, file path (JSON when it starts with '{'), "<tree>|<tree>"
/// text, or a word in x_i of F(arity).
TreeDiagram resolve_element(std::string const& arg, unsigned arity = 2);

}  // namespace thomp
