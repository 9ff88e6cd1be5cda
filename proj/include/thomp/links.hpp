#pragma once

// Jones' construction of a link diagram from an element of F.
//
// The plane graph B(T+, T-) has one vertex per caret of either tree. Its
// edges are the internal tree edges, one edge per leaf joining the leaf's
// parent carets in T+ and T-, one edge per bounded region of the tree
// diagram joining the two carets whose wedges face that region (the carets
// where leaves i and i+1 split), and one edge joining the two roots routed
// around the left of the picture. Every vertex is 4-valent and the graph is
// turned into a link diagram by making each vertex a crossing.
//
// Darts are numbered 4v + s with the four slots of a vertex listed
// counterclockwise:
//   T+ caret (root on top):    parent, left child, wedge, right child
//   T- caret (root at bottom): parent, right child, wedge, left child
// so slots s and s+2 are always opposite. The corner of dart d is the angle
// between d and the next dart counterclockwise.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thomp/group.hpp"

namespace thomp {

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Where a vertex of B comes from.
struct CaretRef {
  bool bottom;             // caret of T- rather than T+
  std::size_t caret;       // preorder index within its tree
  std::size_t depth;       // distance from the root
  std::size_t first_leaf;  // leaves below the caret
  std::size_t last_leaf;
  std::size_t wedge_gap;   // region between leaves wedge_gap and wedge_gap + 1
};

/// A 4-valent plane graph given by a rotation system.
class PlanarMap {
 public:
  PlanarMap() = default;
  /// twin has 4 * vertex_count entries; faces are traced from the rotation.
  PlanarMap(std::size_t vertex_count, std::vector<std::size_t> twin);

  std::size_t vertex_count() const noexcept { return vertices_; }
  std::size_t dart_count() const noexcept { return twin_.size(); }
  std::size_t edge_count() const noexcept { return twin_.size() / 2; }
  std::size_t face_count() const noexcept { return faces_; }
  std::size_t twin(std::size_t dart) const { return twin_[dart]; }
  std::size_t corner_face(std::size_t dart) const { return corner_face_[dart]; }
  std::vector<std::size_t> const& twins() const noexcept { return twin_; }

  long euler_characteristic() const {
    return static_cast<long>(vertices_) - static_cast<long>(edge_count())
           + static_cast<long>(faces_);
  }

  // Annotations filled in by jones_graph.
  std::size_t carets_per_tree = 0;
  std::vector<CaretRef> vertex_origin;
  std::vector<std::size_t> gap_left_face;   // left part of region i
  std::vector<std::size_t> gap_right_face;  // right part of region i
  std::size_t outer_face     = kNone;       // bounded face left of the trees
  std::size_t unbounded_face = kNone;

 private:
  std::size_t vertices_ = 0;
  std::vector<std::size_t> twin_;
  std::vector<std::size_t> corner_face_;
  std::size_t faces_ = 0;
};

struct JonesOptions {
  /// Build from a non-reduced diagram instead of throwing MustReduce; each
  /// removable caret pair then contributes a split unknot.
  bool allow_nonreduced = false;
};

/// B(T+, T-) for a binary diagram with at least one caret.
PlanarMap jones_graph(TreeDiagram const& d, JonesOptions options = {});

/// Over/under assignment when turning B into a link diagram.
enum class CrossingRule {
  /// At every caret the strand joining the two children passes over the
  /// strand joining parent and wedge.
  kChildStrandOver,
  /// Child strand over at T+ carets, under at T- carets.
  kChildOverTopUnderBottom,
};

inline constexpr CrossingRule kDefaultCrossingRule = CrossingRule::kChildStrandOver;

/// A link diagram on the sphere with a distinguished unbounded face.
/// Crossing c owns darts 4c..4c+3 in counterclockwise order; the under
/// strand is darts (s, s+2) with s = under_slot(c). Crossingless unknotted
/// components are kept as free loops, each drawn in the unbounded face and
/// contributing one extra face.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  LinkDiagram(std::vector<std::size_t> twin, std::vector<std::uint8_t> under_slot,
              std::size_t free_loops, std::size_t unbounded_corner);

  static LinkDiagram unknot() { return LinkDiagram({}, {}, 1, kNone); }

  std::size_t crossing_count() const noexcept { return under_.size(); }
  std::size_t dart_count() const noexcept { return twin_.size(); }
  std::size_t twin(std::size_t dart) const { return twin_[dart]; }
  std::vector<std::size_t> const& twins() const noexcept { return twin_; }
  std::uint8_t under_slot(std::size_t crossing) const { return under_[crossing]; }
  bool is_under(std::size_t dart) const { return (dart % 4) % 2 == under_[dart / 4]; }
  std::size_t free_loops() const noexcept { return free_loops_; }

  std::size_t face_count() const noexcept { return faces_; }
  std::size_t corner_face(std::size_t dart) const { return corner_face_[dart]; }
  std::size_t unbounded_face() const noexcept { return unbounded_; }
  /// Face enclosed by free loop j.
  std::size_t loop_face(std::size_t j) const { return faces_ - free_loops_ + j; }
  /// Faces on the two sides of the edge of dart d.
  std::pair<std::size_t, std::size_t> edge_faces(std::size_t dart) const;

  /// Every crossing switched. Edge labels are dropped.
  LinkDiagram mirror() const;

  /// Corner whose face is the unbounded one, as given at construction.
  std::size_t unbounded_corner() const noexcept { return unbounded_corner_; }

  /// Per-dart edge labels kept from a parsed PD code; empty otherwise.
  std::vector<std::size_t> const& edge_labels() const noexcept { return labels_; }
  /// Copy carrying the given labels (equal on twin darts). pd_code then
  /// reuses them and lists each crossing from slot under_slot(c).
  LinkDiagram with_edge_labels(std::vector<std::size_t> labels) const;

 private:
  std::vector<std::size_t> twin_;
  std::vector<std::uint8_t> under_;
  std::vector<std::size_t> corner_face_;
  std::vector<std::size_t> labels_;
  std::size_t free_loops_       = 0;
  std::size_t faces_            = 0;
  std::size_t unbounded_        = 0;
  std::size_t unbounded_corner_ = kNone;
};

LinkDiagram link_diagram(PlanarMap const& m, CrossingRule rule = kDefaultCrossingRule);

/// L(d) for a binary diagram; the identity gives the crossingless unknot.
LinkDiagram jones_link(TreeDiagram const& d, JonesOptions options = {},
                       CrossingRule rule = kDefaultCrossingRule);

std::size_t components(LinkDiagram const& l);

/// "PD[X[a,b,c,d],...]" preceded by '#' header lines carrying the format
/// version, the component count and the unbounded face. Each crossing is
/// listed counterclockwise from the incoming under-strand.
std::string pd_code(LinkDiagram const& l);

/// Parses pd_code output or a bare PD code. Without an unbounded-face
/// annotation the face with the most corners is taken as unbounded.
LinkDiagram parse_pd(std::string_view text);

/// phi_q(x0 of F(2^q)) in reduced form, a member of F_p whenever ord_2(p) divides q.
TreeDiagram spine_element(unsigned q);

}  // namespace thomp
