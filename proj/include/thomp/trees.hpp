#pragma once

// n-ary trees with word-addressed leaves, dyadic rationals and the map rho
// that sends a binary leaf word to the left endpoint of its interval.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thomp {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr unsigned kMaxArity = 256;

/// A finite word over {0, ..., arity-1}. Ordering is lexicographic on the
/// letters (a proper prefix precedes its extensions).
class Word {
 public:
  Word() = default;
  explicit Word(unsigned arity, std::vector<std::uint8_t> letters = {});

  /// Digits '0'..'9' then 'a'..'z' for arities above 10.
  static Word parse(std::string_view digits, unsigned arity = 2);
  static Word zeros(std::size_t count, unsigned arity = 2);

  unsigned arity() const noexcept { return arity_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<std::uint8_t const> letters() const noexcept { return letters_; }
  std::uint8_t operator[](std::size_t i) const { return letters_[i]; }

  void push_back(unsigned letter);
  Word concat(Word const& other) const;
  /// The word with the first `count` letters removed.
  Word suffix(std::size_t count) const;
  bool is_prefix_of(Word const& other) const noexcept;
  bool all_zero() const noexcept;

  std::string to_string() const;

  bool operator==(Word const&) const = default;
  auto operator<=>(Word const&) const = default;

 private:
  unsigned arity_ = 2;
  std::vector<std::uint8_t> letters_;
};

/// Exact value numerator / 2^exponent. Canonical form has an odd numerator
/// or exponent zero, so structural equality is value equality.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt numerator, unsigned exponent);
  Dyadic(long long value) : Dyadic(BigInt(value), 0) {}  // NOLINT

  /// Accepts "a", "a/b" with b a power of two, or "-a/b".
  static Dyadic parse(std::string_view text);

  BigInt const& numerator() const noexcept { return num_; }
  unsigned exponent() const noexcept { return exp_; }

  /// Multiplies by 2^k (k may be negative).
  Dyadic scaled(int k) const;

  /// Residue in Z/p; p must be odd so that 2 is invertible.
  std::uint64_t mod(std::uint64_t p) const;

  std::string to_string() const;

  friend Dyadic operator+(Dyadic const& a, Dyadic const& b);
  friend Dyadic operator-(Dyadic const& a, Dyadic const& b);
  friend Dyadic operator*(Dyadic const& a, Dyadic const& b);
  friend bool operator==(Dyadic const& a, Dyadic const& b);
  friend std::strong_ordering operator<=>(Dyadic const& a, Dyadic const& b);

 private:
  BigInt num_ = 0;
  unsigned exp_ = 0;
};

/// An n-ary tree stored as its preorder node sequence (1 = caret, 0 = leaf).
/// Values are immutable; equality is structural.
class NaryTree {
 public:
  /// The trivial tree consisting of a single leaf.
  explicit NaryTree(unsigned arity = 2);

  static NaryTree caret(unsigned arity = 2);
  static NaryTree from_preorder(unsigned arity, std::vector<std::uint8_t> nodes);

  /// Grammar: leaf = "." ; node = "(" child^n ")". The arity is read off
  /// the first node; `default_arity` is used for the single-leaf tree.
  static NaryTree parse(std::string_view expr, unsigned default_arity = 2);

  unsigned arity() const noexcept { return arity_; }
  std::size_t caret_count() const noexcept { return carets_; }
  std::size_t leaf_count() const noexcept { return nodes_.size() - carets_; }
  bool is_leaf() const noexcept { return carets_ == 0; }
  std::span<std::uint8_t const> preorder() const noexcept { return nodes_; }

  std::string to_string() const;

  bool operator==(NaryTree const&) const = default;
  auto operator<=>(NaryTree const&) const = default;

 private:
  NaryTree(unsigned arity, std::vector<std::uint8_t> nodes, std::size_t carets);

  unsigned arity_;
  std::vector<std::uint8_t> nodes_;
  std::size_t carets_;
};

/// Leaf words in left-to-right order (strictly increasing).
std::vector<Word> leaf_words(NaryTree const& t);

/// Leaf depths, i.e. the lengths of leaf_words(t), without building words.
std::vector<std::size_t> leaf_depths(NaryTree const& t);

Dyadic rho(Word const& w);

/// rho(w) reduced into Z/p, computed as sum a_i * (1/2)^i.
/// Throws InvalidModulus unless p is odd and at least 3.
std::uint64_t rho_mod(Word const& w, std::uint64_t p);

/// Complete tree of the given depth; its leaves are all words of that length.
NaryTree complete_tree(unsigned depth, unsigned arity = 2);

/// Replaces leaf `leaf_index` of t by `sub`.
NaryTree attach(NaryTree const& t, std::size_t leaf_index, NaryTree const& sub);

/// Replaces every leaf i of t by subs[i].
NaryTree substitute_leaves(NaryTree const& t, std::span<NaryTree const> subs);

/// True iff every caret of `coarse` is a caret of `fine`.
bool refines(NaryTree const& fine, NaryTree const& coarse);

struct Refinement {
  NaryTree tree;
  /// first_parts[i] is what gets attached at leaf i of the first input.
  std::vector<NaryTree> first_parts;
  std::vector<NaryTree> second_parts;
};

/// Smallest tree refining both inputs, together with the per-leaf
/// attachments that produce it from each input.
Refinement refine(NaryTree const& t1, NaryTree const& t2);
NaryTree common_refinement(NaryTree const& t1, NaryTree const& t2);

/// Builds the tree whose leaves are exactly the given words. Throws
/// InvalidPartition if the words are not the leaves of a tree.
NaryTree tree_from_leaf_words(std::span<Word const> words, unsigned arity = 2);

/// Binary tree whose leaves start at b[0], ..., b[m-1], where
/// 0 = b[0] < ... < b[m] = 1 and every [b_i, b_{i+1}] is a standard
/// dyadic interval.
NaryTree tree_from_breakpoints(std::span<Dyadic const> breakpoints);

/// Leaf indices i such that leaves i..i+n-1 hang off a single caret.
std::vector<std::size_t> exposed_carets(NaryTree const& t);

/// Removes the exposed caret whose first leaf is `leaf_index`.
NaryTree contract(NaryTree const& t, std::size_t leaf_index);

}  // namespace thomp
