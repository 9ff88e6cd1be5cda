#pragma once

// Dehn p-colorings of link diagrams.
//
// A Dehn p-coloring assigns a residue to every face, 0 on the unbounded face,
// so that at each crossing the two faces on one side of the under-strand
// have the same sum as the two faces on its other side. With the
// counterclockwise corners c0..c3 of a crossing whose under-strand is darts
// (s, s+2), the equation reads c_s + c_{s+1} = c_{s+2} + c_{s+3}.

#include <cstdint>
#include <optional>
#include <vector>

#include "thomp/group.hpp"
#include "thomp/links.hpp"
#include "thomp/trees.hpp"

namespace thomp {

/// Dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  BigInt const& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(IntMatrix const& other) const;
  bool operator==(IntMatrix const&) const = default;

  bool is_diagonal() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

/// U * M * V = D with U, V unimodular, D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal of D, length min(rows, cols).
  std::vector<BigInt> diagonal() const;
};

SmithForm smith_normal_form(IntMatrix const& m);

/// Number of x in (Z/m)^cols with M x = 0, read off the Smith form.
BigInt kernel_size_mod(IntMatrix const& m, std::uint64_t modulus);

/// Fraction-free Gaussian elimination.
BigInt bareiss_determinant(IntMatrix m);

/// Rows a + b - c - d, one per crossing, followed by the row pinning the unbounded
/// face. Columns are faces.
struct ColoringSystem {
  IntMatrix matrix;

  explicit ColoringSystem(LinkDiagram const& l);
};

struct Checkerboard {
  std::vector<std::uint8_t> black;  // per face

  bool is_black(std::size_t face) const { return black.at(face) != 0; }
  std::size_t white_count() const;
};

/// Unique 2-coloring of faces with adjacent faces opposite and the unbounded
/// face white. Throws PreconditionViolation if the face graph is not bipartite.
Checkerboard checkerboard(LinkDiagram const& l);

struct DehnColoring {
  std::uint64_t p;
  std::vector<std::uint64_t> faces;  // residue per face
};

/// a + b = c + d mod p at every crossing and 0 on the unbounded face.
bool is_dehn_coloring(LinkDiagram const& l, DehnColoring const& c);

/// Whites all 0 and blacks all equal. Throws PreconditionViolation when the
/// coloring and checkerboard have different face counts.
bool is_trivial(DehnColoring const& c, Checkerboard const& cb);

struct DehnColorings {
  BigInt count;
  std::optional<DehnColoring> nontrivial;
};

/// All solutions mod p (any p >= 2), counted exactly; a nontrivial sample is
/// returned whenever one exists.
DehnColorings dehn_colorings(LinkDiagram const& l, std::uint64_t p);

/// Coloring of L(d) read off the p-strip-coloring of a reduced member d:
/// the region between leaves i and i+1 is split by the vertical strand into
/// a left part colored a_i and a right part colored -a_i (a_i the color of
/// leaf i+1), the bounded outer face gets 0 and the unbounded face 1, and
/// finally 1 is subtracted everywhere. Not checked.
DehnColoring strip_rule_coloring(TreeDiagram const& d, std::uint64_t p);

/// strip_rule_coloring validated crossing by crossing; falls back to a solver
/// sample should the rule fail. Throws NotInSubgroup for non-members and
/// TrivialElement for the identity.
DehnColoring coloring_from_strip(TreeDiagram const& d, std::uint64_t p);

/// Exhaustive count of Fox p-colorings (arc colorings with 2 over = sum of
/// unders). Exponential; throws SizeLimitExceeded above max_crossings.
BigInt fox_colorings_bruteforce(LinkDiagram const& l, std::uint64_t p,
                                std::size_t max_crossings = 24);

/// |det| of the reduced Goeritz matrix on white faces.
BigInt determinant(LinkDiagram const& l);

}  // namespace thomp
