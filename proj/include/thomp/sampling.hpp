#pragma once

// Seeded random trees, diagrams, words and F_p members for property tests
// and the census.

#include <cstdint>
#include <random>

#include "thomp/group.hpp"

namespace thomp {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() noexcept { return rng_; }

  /// Uniform in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi);

  /// Grows a tree by splitting a uniformly chosen leaf `carets` times.
  NaryTree tree(std::size_t carets, unsigned arity = 2);

  /// Independent domain and range trees with the same caret count; not
  /// reduced in general.
  TreeDiagram diagram(std::size_t carets, unsigned arity = 2);

  /// reduce(diagram(c)) with c uniform in [1, max_carets].
  TreeDiagram reduced_diagram(std::size_t max_carets, unsigned arity = 2);

  /// `length` letters x_i^{+-1} with i < max_index.
  GroupWord word(unsigned arity, std::size_t length, unsigned max_index);

  /// A non-trivial reduced member of F_p: phi_q of a word of length 1..3 in
  /// x_0, ..., x_{m-1} of F(2^q), where m = member_generator_count(q).
  TreeDiagram member(std::uint64_t p);

  /// reduce(phi_q(D)) for a random reduced diagram D of F(2^q) with at most
  /// max_carets carets (at most 2 once q >= 6). Reaches knots far more
  /// often than member().
  TreeDiagram member_from_diagram(std::uint64_t p, std::size_t max_carets = 3);

 private:
  std::mt19937_64 rng_;
};

/// Number of generators of F(2^q) used by Sampler::member. All 2^q for
/// q <= 3; fewer for larger q, since a single 2^q-caret already becomes
/// 2^q - 1 binary carets after embedding.
unsigned member_generator_count(unsigned q);

}  // namespace thomp
