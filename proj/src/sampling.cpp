#include "thomp/sampling.hpp"

#include <algorithm>

#include "thomp/fp.hpp"

namespace thomp {

std::size_t Sampler::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

NaryTree Sampler::tree(std::size_t carets, unsigned arity) {
  NaryTree t(arity);
  for (std::size_t k = 0; k < carets; ++k) {
    t = attach(t, uniform(0, t.leaf_count() - 1), NaryTree::caret(arity));
  }
  return t;
}

TreeDiagram Sampler::diagram(std::size_t carets, unsigned arity) {
  auto d = tree(carets, arity);
  auto r = tree(carets, arity);
  return TreeDiagram(std::move(d), std::move(r));
}

TreeDiagram Sampler::reduced_diagram(std::size_t max_carets, unsigned arity) {
  return reduce(diagram(uniform(1, max_carets), arity));
}

GroupWord Sampler::word(unsigned arity, std::size_t length, unsigned max_index) {
  std::vector<GroupWord::Letter> letters;
  for (std::size_t k = 0; k < length; ++k) {
    auto index = static_cast<unsigned>(uniform(0, max_index - 1));
    letters.push_back({index, uniform(0, 1) ? 1L : -1L});
  }
  return GroupWord(arity, std::move(letters));
}

unsigned member_generator_count(unsigned q) {
  unsigned n = 1u << q;
  return std::min(n, std::max(2u, 64u / (n - 1)));
}

TreeDiagram Sampler::member(std::uint64_t p) {
  unsigned q = ord2(p);
  unsigned n = 1u << q;
  while (true) {
    auto w = word(n, uniform(1, 3), member_generator_count(q));
    auto d = reduce(phi_q(evaluate_word(w), q));
    if (d.caret_count() > 0) {
      return d;
    }
  }
}

TreeDiagram Sampler::member_from_diagram(std::uint64_t p, std::size_t max_carets) {
  unsigned q = ord2(p);
  unsigned n = 1u << q;
  if (q >= 6) {
    max_carets = std::min<std::size_t>(max_carets, 2);
  }
  while (true) {
    auto d = reduce(phi_q(reduced_diagram(max_carets, n), q));
    if (d.caret_count() > 0) {
      return d;
    }
  }
}

}  // namespace thomp
