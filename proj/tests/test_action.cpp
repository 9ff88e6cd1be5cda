#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "thomp/action.hpp"
#include "thomp/error.hpp"
#include "thomp/fixtures.hpp"
#include "thomp/fp.hpp"
#include "thomp/group.hpp"
#include "thomp/sampling.hpp"

using namespace thomp;

namespace {

WordClass cls(char const* w, unsigned q) {
  return WordClass(Word::parse(w), q);
}

std::vector<Word> nonzero_words(std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << len); ++bits) {
      std::vector<std::uint8_t> letters(len);
      for (std::size_t i = 0; i < len; ++i) {
        letters[i] = (bits >> (len - 1 - i)) & 1;
      }
      out.emplace_back(2, letters);
    }
  }
  return out;
}

// Whether d maps S_i into S_i on all words up to max_len, computed directly.
bool stabilizes_residue(TreeDiagram const& d, std::uint64_t i, std::uint64_t p,
                        std::size_t max_len) {
  unsigned q = ord2(p);
  for (auto const& u : nonzero_words(max_len)) {
    if (u.length() % q != 0 || rho_mod(u, p) != i) {
      continue;
    }
    auto image = act(WordClass(u, q), d).representative();
    if (image.length() % q != 0 || rho_mod(image, p) != i) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("canonical representatives", "[action]") {
  CHECK(cls("1000", 2).representative().to_string() == "10");
  CHECK(cls("1", 3).representative().to_string() == "1");
  CHECK(cls("0100", 2).representative().to_string() == "01");
  CHECK(cls("0100", 3).representative().to_string() == "0100");
  CHECK(cls("10000", 2).representative().to_string() == "1");
  CHECK(cls("1", 2) == cls("100", 2));
  CHECK(cls("01", 2).to_string() == "[01]");
  CHECK_THROWS_AS(cls("000", 2), PreconditionViolation);
  CHECK_THROWS_AS(cls("", 2), PreconditionViolation);
}

TEST_CASE("action of x0 inverse", "[action]") {
  auto xinv = inverse(generator(2, 0));
  for (unsigned q : {2u, 3u, 4u}) {
    CHECK(act(cls("01", q), xinv) == cls("001", q));
    std::string expect = "01" + std::string(q - 1, '0');
    CHECK(act(cls("1", q), xinv) == WordClass(Word::parse(expect), q));
    CHECK(act(cls("1", q), TreeDiagram::identity()) == cls("1", q));
  }
}

TEST_CASE("residue sets", "[action]") {
  CHECK(in_S(cls("10", 2), 2, 3));
  CHECK_FALSE(in_S(cls("10", 2), 1, 3));
  for (std::uint64_t i = 0; i < 3; ++i) {
    CHECK_FALSE(in_S(cls("1", 2), i, 3));
  }
  CHECK(in_S(cls("01", 2), 1, 3));
  CHECK_THROWS_AS(in_S(cls("01", 3), 1, 3), PreconditionViolation);
  // Independent of the representative.
  for (auto const& u : nonzero_words(8)) {
    for (std::uint64_t i = 0; i < 3; ++i) {
      CHECK(in_S(WordClass(u, 2), i, 3) == in_S(WordClass(u.concat(Word::zeros(2)), 2), i, 3));
    }
  }
}

TEST_CASE("stabilizer samples", "[action]") {
  CHECK(stabilizes_sample(TreeDiagram::identity(), 3, 8));
  CHECK(stabilizes_sample(ex3(), 3, 8));
  CHECK_FALSE(stabilizes_sample(generator(2, 0), 3, 8));
  for (unsigned i = 0; i < 4; ++i) {
    CHECK(stabilizes_sample(reduce(phi_q(generator(4, i), 2)), 3, 8));
  }
  for (unsigned i = 0; i < 8; ++i) {
    CHECK(stabilizes_sample(reduce(phi_q(generator(8, i), 3)), 7, 9));
  }
}

TEST_CASE("non-membership witnesses", "[action]") {
  auto x0 = generator(2, 0);
  auto w  = non_membership_witness(x0, 3);
  REQUIRE(w.has_value());
  CHECK(*w == cls("01", 2));
  CHECK(in_S(*w, 1, 3));
  auto image = act(*w, x0);
  CHECK(image == cls("10", 2));
  CHECK(in_S(image, 2, 3));
  CHECK_FALSE(non_membership_witness(ex3(), 3).has_value());
  CHECK_FALSE(non_membership_witness(reduce(phi_q(generator(4, 0), 2)), 3).has_value());

  Sampler s(61);
  for (std::uint64_t p : {3u, 5u, 7u, 9u, 15u}) {
    unsigned q = ord2(p);
    for (int k = 0; k < 100; ++k) {
      auto d  = s.reduced_diagram(6);
      auto wd = non_membership_witness(d, p);
      CHECK(wd.has_value() != is_member(d, p));
      if (wd) {
        auto u = wd->representative();
        auto v = act(*wd, d).representative();
        bool changed = (u.length() % q != v.length() % q) || rho_mod(u, p) != rho_mod(v, p);
        CHECK(changed);
      }
    }
  }
}

TEST_CASE("right action law and well-definedness", "[action]") {
  Sampler s(67);
  auto words = nonzero_words(6);
  for (int k = 0; k < 200; ++k) {
    unsigned q = static_cast<unsigned>(s.uniform(1, 4));
    auto const& u = words[s.uniform(0, words.size() - 1)];
    auto a = s.reduced_diagram(5);
    auto b = s.reduced_diagram(5);
    WordClass c(u, q);
    CHECK(act(act(c, a), b) == act(c, multiply(a, b)));
    CHECK(act(WordClass(u.concat(Word::zeros(q)), q), a) == act(c, a));
    CHECK(act(act(c, a), inverse(a)) == c);
  }
}

TEST_CASE("action matches the piecewise-linear map", "[action]") {
  Sampler s(71);
  auto words = nonzero_words(7);
  for (int k = 0; k < 300; ++k) {
    auto const& u = words[s.uniform(0, words.size() - 1)];
    auto d = s.reduced_diagram(6);
    auto image = act(WordClass(u, 2), d).representative();
    CHECK(rho(image) == pl_map(d)(rho(u)));
  }
}

TEST_CASE("stabilizing one residue set means stabilizing all", "[action]") {
  Sampler s(73);
  for (std::uint64_t p : {3u, 7u}) {
    std::size_t len = p == 3 ? 10 : 9;
    for (int k = 0; k < 40; ++k) {
      auto d = k % 2 ? s.reduced_diagram(3) : s.member_from_diagram(p, 2);
      std::vector<bool> pass;
      for (std::uint64_t i = 0; i < p; ++i) {
        pass.push_back(stabilizes_residue(d, i, p, len));
      }
      bool all  = std::all_of(pass.begin(), pass.end(), [](bool b) { return b; });
      bool none = std::none_of(pass.begin(), pass.end(), [](bool b) { return b; });
      CHECK((all || none));
      CHECK(all == is_member(d, p));
      CHECK(stabilizes_sample(d, p, len) == is_member(d, p));
    }
  }
}
