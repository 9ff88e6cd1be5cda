#pragma once

// Brown-Thompson groups F(n) as tree diagrams.
//
// Composition convention: multiply(a, b) acts as "a then b". The product is
// formed by refining a's range tree and b's domain tree to a common tree,
// matching the usual definition where the product of (A+, A-) and (B+, B-)
// is (A+', B-') once A-' = B+'. With this convention the PL homeomorphism of
// a*b is pl_map(b) composed after pl_map(a), and x0^-1 x1 x0 = x2.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thomp/trees.hpp"

namespace thomp {

/// A pair (domain, range) of same-size n-ary trees; leaf i of the domain
/// corresponds to leaf i of the range.
class TreeDiagram {
 public:
  TreeDiagram(NaryTree domain, NaryTree range);

  static TreeDiagram identity(unsigned arity = 2);

  /// "<tree>|<tree>"; leading lines starting with '#' are skipped.
  static TreeDiagram parse(std::string_view text, unsigned default_arity = 2);
  /// {"n": int, "domain": str, "range": str}
  static TreeDiagram from_json(std::string_view json);

  NaryTree const& domain() const noexcept { return domain_; }
  NaryTree const& range() const noexcept { return range_; }
  unsigned arity() const noexcept { return domain_.arity(); }
  std::size_t caret_count() const noexcept { return domain_.caret_count(); }
  std::size_t leaf_count() const noexcept { return domain_.leaf_count(); }

  std::string to_string() const;
  std::string to_json() const;

  bool operator==(TreeDiagram const&) const = default;
  auto operator<=>(TreeDiagram const&) const = default;

 private:
  NaryTree domain_;
  NaryTree range_;
};

/// A word in the generators x_i with nonzero integer exponents.
class GroupWord {
 public:
  struct Letter {
    unsigned index;
    long exponent;
    bool operator==(Letter const&) const = default;
  };

  explicit GroupWord(unsigned arity = 2, std::vector<Letter> letters = {});

  /// Whitespace-separated tokens "x<i>" or "x<i>^<e>".
  static GroupWord parse(std::string_view text, unsigned arity = 2);

  unsigned arity() const noexcept { return arity_; }
  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::string to_string() const;

 private:
  unsigned arity_;
  std::vector<Letter> letters_;
};

/// Piecewise-linear homeomorphism of [0, 1] with dyadic breakpoints and
/// slopes that are powers of two. Breakpoints are stored with collinear
/// points removed, so equality is equality of maps.
class PLMap {
 public:
  explicit PLMap(std::vector<std::pair<Dyadic, Dyadic>> breakpoints);

  std::vector<std::pair<Dyadic, Dyadic>> const& breakpoints() const noexcept {
    return points_;
  }
  /// log2 of the slope on segment i.
  int slope_exponent(std::size_t segment) const { return slopes_[segment]; }

  Dyadic operator()(Dyadic const& x) const;

  bool operator==(PLMap const& other) const { return points_ == other.points_; }

 private:
  std::vector<std::pair<Dyadic, Dyadic>> points_;
  std::vector<int> slopes_;
};

/// Removes carets shared by both trees until none is left. The result is
/// the unique reduced representative.
TreeDiagram reduce(TreeDiagram const& d);
bool is_reduced(TreeDiagram const& d);

/// Attaches a caret at leaf i of both trees (an insertion).
TreeDiagram insert_caret(TreeDiagram const& d, std::size_t leaf_index);

TreeDiagram multiply(TreeDiagram const& a, TreeDiagram const& b);
TreeDiagram inverse(TreeDiagram const& d);
TreeDiagram power(TreeDiagram const& d, long exponent);
/// y^-1 x y
TreeDiagram conjugate(TreeDiagram const& x, TreeDiagram const& y);

/// The generator x_i of F(n), in rightmost-spine form. With
/// i = k(n-1) + r, 0 <= r < n-1, both trees have carets at (n-1)^j for
/// j <= k; the domain adds one at (n-1)^k r and the range one at (n-1)^(k+1).
/// For n = 2 this is x_i with carets at 1^j, plus 1^i 0 or 1^(i+1).
TreeDiagram generator(unsigned n, unsigned i);

/// Evaluates a word; indices >= n are expanded as x_j = x0^-1 x_{j-n+1} x0.
TreeDiagram evaluate_word(GroupWord const& w);

/// The homeomorphism of a binary diagram: leaf interval i of the domain
/// tree maps affinely onto leaf interval i of the range tree.
PLMap pl_map(TreeDiagram const& d);

/// Embedding F(2^q) -> F replacing every 2^q-caret by the complete
/// binary tree of depth q.
TreeDiagram phi_q(TreeDiagram const& d, unsigned q);

/// Inverse of phi_q on its image. Throws NotInSubgroup when the diagram
/// does not lie in phi_q(F(2^q)).
TreeDiagram unphi_q(TreeDiagram const& d, unsigned q);

}  // namespace thomp
