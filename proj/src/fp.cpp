#include "thomp/fp.hpp"

#include "thomp/error.hpp"

namespace thomp {

Modulus::Modulus(std::uint64_t p) : p_(p), q_(ord2(p)) {}

unsigned ord2(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) {
    throw InvalidModulus("modulus must be odd and at least 3, got " + std::to_string(p));
  }
  std::uint64_t r = 2 % p;
  unsigned q      = 1;
  while (r != 1) {
    r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * 2 % p);
    ++q;
  }
  return q;
}

std::optional<std::size_t> ResidueTable::first_mismatch() const {
  for (std::size_t i = 0; i < domain_residues.size(); ++i) {
    if (domain_residues[i] != range_residues[i]) {
      return i;
    }
  }
  return std::nullopt;
}

ResidueTable residue_table(TreeDiagram const& d, std::uint64_t p) {
  ord2(p);  // validates p
  if (d.arity() != 2) {
    throw ArityMismatch("residue tests need a binary diagram");
  }
  auto r = reduce(d);
  ResidueTable t;
  t.domain_leaves = leaf_words(r.domain());
  t.range_leaves  = leaf_words(r.range());
  for (auto const& w : t.domain_leaves) {
    t.domain_residues.push_back(rho_mod(w, p));
  }
  for (auto const& w : t.range_leaves) {
    t.range_residues.push_back(rho_mod(w, p));
  }
  return t;
}

bool is_member(TreeDiagram const& d, std::uint64_t p) {
  return !residue_table(d, p).first_mismatch().has_value();
}

bool is_member_by_length(TreeDiagram const& d, std::uint64_t p) {
  unsigned q = ord2(p);
  if (d.arity() != 2) {
    throw ArityMismatch("membership tests need a binary diagram");
  }
  auto r  = reduce(d);
  auto lp = leaf_depths(r.domain());
  auto lm = leaf_depths(r.range());
  for (std::size_t i = 0; i < lp.size(); ++i) {
    if (lp[i] % q != lm[i] % q) {
      return false;
    }
  }
  return true;
}

std::vector<Bifurcation> bifurcations(NaryTree const& t) {
  if (t.arity() != 2) {
    throw ArityMismatch("bifurcations are defined for binary trees");
  }
  // Each caret is closed once its second child has been completed; the
  // leaf counter at that moment is the leaf following the caret.
  struct Open {
    std::size_t slot;
    std::size_t left;
    std::size_t wedge;
    unsigned done;
  };
  std::vector<Bifurcation> out(t.caret_count());
  std::vector<Open> stack;
  std::size_t leaves = 0;
  std::size_t carets = 0;
  auto child_done    = [&] {
    while (!stack.empty()) {
      auto& top = stack.back();
      if (++top.done == 1) {
        top.wedge = leaves;
        return;
      }
      out[top.slot] = {top.left, top.wedge, leaves};
      stack.pop_back();
    }
  };
  for (auto node : t.preorder()) {
    if (node) {
      stack.push_back({carets++, leaves, 0, 0});
    } else {
      ++leaves;
      child_done();
    }
  }
  return out;
}

bool StripColoring::satisfies_bifurcation_rule(NaryTree const& t) const {
  for (auto const& b : bifurcations(t)) {
    std::uint64_t lhs = (2 * region(b.wedge)) % p;
    std::uint64_t rhs = (region(b.left) + region(b.right)) % p;
    if (lhs != rhs) {
      return false;
    }
  }
  return true;
}

StripColoring strip_coloring(NaryTree const& t, std::uint64_t p) {
  ord2(p);
  StripColoring c{p, {}, 1 % p};
  for (auto const& w : leaf_words(t)) {
    c.leaf_colors.push_back(rho_mod(w, p));
  }
  return c;
}

std::uint64_t omega3(Word const& w) {
  if (w.arity() != 2) {
    throw ArityMismatch("omega3 is defined on binary words");
  }
  long s = 0;
  for (std::size_t i = 0; i < w.length(); ++i) {
    // Letters are 1-indexed: a_1 carries sign (-1)^1.
    s += (i % 2 == 0 ? -1 : 1) * static_cast<long>(w[i]);
  }
  return static_cast<std::uint64_t>(((s % 3) + 3) % 3);
}

TreeDiagram normalize_lengths(TreeDiagram const& d, unsigned q) {
  if (q == 0) {
    throw PreconditionViolation("normalize_lengths: q must be positive");
  }
  if (d.arity() != 2) {
    throw ArityMismatch("normalize_lengths expects a binary diagram");
  }
  auto lp = leaf_depths(d.domain());
  auto lm = leaf_depths(d.range());
  std::vector<NaryTree> subs;
  subs.reserve(lp.size());
  for (std::size_t i = 0; i < lp.size(); ++i) {
    if (lp[i] % q != lm[i] % q) {
      throw NotInSubgroup("leaf " + std::to_string(i) + " has lengths " + std::to_string(lp[i])
                          + " and " + std::to_string(lm[i]) + ", not congruent mod "
                          + std::to_string(q));
    }
    subs.push_back(complete_tree(static_cast<unsigned>((q - lp[i] % q) % q)));
  }
  return TreeDiagram(substitute_leaves(d.domain(), subs), substitute_leaves(d.range(), subs));
}

bool residue_cycle_check(NaryTree const& t, std::uint64_t p) {
  unsigned q = ord2(p);
  auto words = leaf_words(t);
  for (auto const& w : words) {
    if (w.length() % q != 0) {
      throw PreconditionViolation("leaf " + w.to_string() + " has length not divisible by "
                                  + std::to_string(q));
    }
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (rho_mod(words[i], p) != i % p) {
      return false;
    }
  }
  return (words.size() - 1) % p == 0;
}

}  // namespace thomp
