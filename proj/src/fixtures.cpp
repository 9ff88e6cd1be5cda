#include "thomp/fixtures.hpp"

#include "thomp/error.hpp"

namespace thomp {

namespace {

NaryTree from_words(std::initializer_list<char const*> leaves) {
  std::vector<Word> words;
  for (auto const* w : leaves) {
    words.push_back(Word::parse(w, 2));
  }
  return tree_from_leaf_words(words);
}

}  // namespace

TreeDiagram ex3() {
  return TreeDiagram::parse("((.((..).)).)|((..)(.(..)))");
}

TreeDiagram ex7() {
  return TreeDiagram(
      from_words({"00", "01000", "01001", "010100", "010101", "010110", "010111", "011", "1"}),
      from_words({"00", "01", "10", "110", "111000", "111001", "111010", "111011", "1111"}));
}

std::string fig8_pd() {
  return "# thomp pd v1\n# components 1\n# unbounded 0 0\n"
         "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]\n";
}

std::vector<std::string> fixture_names() {
  return {"ex3", "ex7", "fig8", "spine-q2", "spine-q3"};
}

Fixture fixture(std::string_view name) {
  if (name == "ex3") {
    return {"ex3", ex3(), std::nullopt};
  }
  if (name == "ex7") {
    return {"ex7", ex7(), std::nullopt};
  }
  if (name == "fig8") {
    return {"fig8", std::nullopt, fig8_pd()};
  }
  if (name == "spine-q2") {
    return {"spine-q2", spine_element(2), std::nullopt};
  }
  if (name == "spine-q3") {
    return {"spine-q3", spine_element(3), std::nullopt};
  }
  throw Error("unknown fixture '" + std::string(name) + "'");
}

std::string Fixture::text() const {
  if (element) {
    return element->to_string() + "\n";
  }
  return *pd;
}

LinkDiagram Fixture::link() const {
  if (element) {
    return jones_link(*element);
  }
  return parse_pd(*pd);
}

}  // namespace thomp
