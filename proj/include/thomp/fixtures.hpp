#pragma once

// Named inputs shared by the CLI, the tests and the acceptance suite.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thomp/group.hpp"
#include "thomp/links.hpp"

namespace thomp {

struct Fixture {
  std::string name;
  std::optional<TreeDiagram> element;  // set for element fixtures
  std::optional<std::string> pd;       // set for the knot fixture

  /// Text form: "<tree>|<tree>" or the PD code, newline terminated.
  std::string text() const;
  LinkDiagram link() const;
};

/// ex3, ex7, fig8, spine-q2, spine-q3.
std::vector<std::string> fixture_names();

/// Throws Error for unknown names.
Fixture fixture(std::string_view name);

/// The p = 3 example: residues 0,1,2,0,2 on both trees.
TreeDiagram ex3();
/// The p = 7 example on nine leaves.
TreeDiagram ex7();
/// Four-crossing figure-eight knot.
std::string fig8_pd();

}  // namespace thomp
