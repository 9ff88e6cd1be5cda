#include "thomp/action.hpp"

#include "thomp/error.hpp"
#include "thomp/fp.hpp"

namespace thomp {

WordClass::WordClass(Word const& w, unsigned q) : q_(q), rep_(w) {
  if (q == 0) {
    throw PreconditionViolation("block length q must be positive");
  }
  if (w.arity() != 2) {
    throw ArityMismatch("word classes are binary");
  }
  if (w.all_zero()) {
    throw PreconditionViolation("all-zero word '" + w.to_string() + "' has no class");
  }
  auto letters = std::vector<std::uint8_t>(w.letters().begin(), w.letters().end());
  while (letters.size() >= q) {
    bool zero_block = true;
    for (std::size_t k = letters.size() - q; k < letters.size(); ++k) {
      zero_block = zero_block && letters[k] == 0;
    }
    if (!zero_block) {
      break;
    }
    letters.resize(letters.size() - q);
  }
  rep_ = Word(2, std::move(letters));
}

WordClass act(WordClass const& c, TreeDiagram const& d) {
  if (d.arity() != 2) {
    throw ArityMismatch("F acts through binary diagrams");
  }
  auto dom = leaf_words(d.domain());
  auto ran = leaf_words(d.range());
  Word u   = c.representative();
  // Walk the domain tree along u; the leaves are prefix-free, so at most one
  // is a prefix of u.
  while (true) {
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (dom[i].is_prefix_of(u)) {
        return WordClass(ran[i].concat(u.suffix(dom[i].length())), c.q());
      }
    }
    u = u.concat(Word::zeros(c.q()));
  }
}

bool in_S(WordClass const& c, std::uint64_t i, std::uint64_t p) {
  unsigned q = ord2(p);
  if (q != c.q()) {
    throw PreconditionViolation("class has q = " + std::to_string(c.q()) + " but ord_2("
                                + std::to_string(p) + ") = " + std::to_string(q));
  }
  auto const& u = c.representative();
  return u.length() % q == 0 && rho_mod(u, p) == i % p;
}

bool stabilizes_sample(TreeDiagram const& d, std::uint64_t p, std::size_t max_len) {
  unsigned q = ord2(p);
  for (std::size_t len = q; len <= max_len; len += q) {
    if (len >= 63) {
      throw SizeLimitExceeded("stabilizes_sample: word length too large to enumerate");
    }
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<std::uint8_t> letters(len);
      for (std::size_t k = 0; k < len; ++k) {
        letters[k] = static_cast<std::uint8_t>((bits >> (len - 1 - k)) & 1u);
      }
      Word u(2, std::move(letters));
      WordClass image = act(WordClass(u, q), d);
      auto const& v   = image.representative();
      if (v.length() % q != 0 || rho_mod(v, p) != rho_mod(u, p)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<WordClass> non_membership_witness(TreeDiagram const& d, std::uint64_t p) {
  unsigned q   = ord2(p);
  auto table   = residue_table(d, p);
  auto mismatch = table.first_mismatch();
  if (!mismatch) {
    return std::nullopt;
  }
  // Leaf 0 is all zeros on both sides, so the mismatching leaf contains a 1.
  Word u        = table.domain_leaves[*mismatch];
  std::size_t j = (q - u.length() % q) % q;
  return WordClass(u.concat(Word::zeros(j)), q);
}

}  // namespace thomp
