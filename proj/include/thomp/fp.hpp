#pragma once

// The p-colorable subgroup F_p of F: diagrams whose corresponding leaves
// carry equal rho-residues mod p. Equivalent descriptions implemented here:
// the residue test, the leaf-length test mod q = ord_2(p), and the strip
// coloring with 2b = a + c at every bifurcation.

#include <cstdint>
#include <optional>
#include <vector>

#include "thomp/group.hpp"
#include "thomp/trees.hpp"

namespace thomp {

/// An odd modulus p >= 3 together with q, the multiplicative order of 2.
class Modulus {
 public:
  explicit Modulus(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  unsigned q() const noexcept { return q_; }

 private:
  std::uint64_t p_;
  unsigned q_;
};

/// Least q > 0 with 2^q = 1 mod p. Throws InvalidModulus for even p or p < 3.
unsigned ord2(std::uint64_t p);

/// Residues rho(i+) and rho(i-) of every leaf pair of the reduced diagram.
struct ResidueTable {
  std::vector<Word> domain_leaves;
  std::vector<Word> range_leaves;
  std::vector<std::uint64_t> domain_residues;
  std::vector<std::uint64_t> range_residues;

  /// First leaf whose residues differ, if any.
  std::optional<std::size_t> first_mismatch() const;
};

ResidueTable residue_table(TreeDiagram const& d, std::uint64_t p);

bool is_member(TreeDiagram const& d, std::uint64_t p);

/// Same predicate via ||i+|| = ||i-|| mod ord_2(p).
bool is_member_by_length(TreeDiagram const& d, std::uint64_t p);

/// Leaf positions around one caret of a binary tree: `left` is the first
/// leaf of the caret, `wedge` the first leaf of its right child and `right`
/// the leaf after the caret (== leaf_count for the right unbounded region).
struct Bifurcation {
  std::size_t left;
  std::size_t wedge;
  std::size_t right;
};

/// One entry per caret, in preorder.
std::vector<Bifurcation> bifurcations(NaryTree const& t);

/// Colors of the half-strip regions of a binary tree: leaf_colors[i] is
/// the region to the left of leaf i; the right unbounded region has color 1.
struct StripColoring {
  std::uint64_t p;
  std::vector<std::uint64_t> leaf_colors;
  std::uint64_t right_color;

  /// Color of the region left of leaf i, or the right region for i = count.
  std::uint64_t region(std::size_t i) const {
    return i < leaf_colors.size() ? leaf_colors[i] : right_color;
  }
  /// Checks 2b = a + c (mod p) at every bifurcation of t.
  bool satisfies_bifurcation_rule(NaryTree const& t) const;
};

StripColoring strip_coloring(NaryTree const& t, std::uint64_t p);

/// Alternating digit sum, sum (-1)^i a_i reduced mod 3.
std::uint64_t omega3(Word const& w);

/// Equivalent diagram whose leaf lengths are all multiples of q, obtained
/// by attaching a complete tree of depth (-||i+|| mod q) at each offending
/// leaf of both trees. Throws NotInSubgroup when ||i+|| != ||i-|| mod q.
TreeDiagram normalize_lengths(TreeDiagram const& d, unsigned q);

/// For a tree all of whose leaf lengths are multiples of ord_2(p): true iff
/// the leaf residues read 0, 1, ..., p-1, 0, 1, ... and end at 0.
bool residue_cycle_check(NaryTree const& t, std::uint64_t p);

}  // namespace thomp
