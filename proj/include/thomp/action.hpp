#pragma once

// The right action of F on W^q, binary words with at least one 1 taken
// modulo appending or removing blocks of q trailing zeros, and the
// stabilizer description of F_p.
//
// For members of F_p the action preserves the residue of every class
// pointwise, not only the sets S_i: a class u = l+ v is sent to l- v and
// rho(l- v) - rho(l+ v) = rho(l-) - rho(l+) = 0 mod p once ||l+|| = ||l-||
// mod q. stabilizes_sample checks this pointwise statement.

#include <cstdint>
#include <optional>

#include "thomp/group.hpp"
#include "thomp/trees.hpp"

namespace thomp {

class WordClass {
 public:
  /// Canonical (shortest) representative of the class of w. Throws
  /// PreconditionViolation for all-zero words.
  WordClass(Word const& w, unsigned q);

  unsigned q() const noexcept { return q_; }
  Word const& representative() const noexcept { return rep_; }
  std::string to_string() const { return "[" + rep_.to_string() + "]"; }

  bool operator==(WordClass const&) const = default;

 private:
  unsigned q_;
  Word rep_;
};

inline WordClass canonical(Word const& w, unsigned q) {
  return WordClass(w, q);
}

/// c * d: pad the representative with q-blocks of zeros until a domain leaf
/// l+ is a prefix, then swap it for the matching range leaf l-.
WordClass act(WordClass const& c, TreeDiagram const& d);

/// Membership in S_i^q = { [u] : ||u|| in qN, rho(u) = i mod p }.
/// Throws PreconditionViolation if c.q() != ord_2(p).
bool in_S(WordClass const& c, std::uint64_t i, std::uint64_t p);

/// For every nonzero word u with ||u|| <= max_len and ||u|| = 0 mod q,
/// checks that u * d keeps both length mod q and residue.
bool stabilizes_sample(TreeDiagram const& d, std::uint64_t p, std::size_t max_len);

/// A class [l+ 0^j] whose residue d changes, built from the first leaf with
/// rho(l+) != rho(l-) mod p; none if d is a member of F_p.
std::optional<WordClass> non_membership_witness(TreeDiagram const& d, std::uint64_t p);

}  // namespace thomp
