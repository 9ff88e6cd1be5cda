#include <vector>

#include "catch_amalgamated.hpp"
#include "thomp/coloring.hpp"
#include "thomp/error.hpp"
#include "thomp/fixtures.hpp"
#include "thomp/fp.hpp"
#include "thomp/links.hpp"
#include "thomp/sampling.hpp"

using namespace thomp;

namespace {

// Counts face assignments with the unbounded face 0 satisfying the crossing
// relation, by enumeration; also reports whether a nontrivial one exists.
struct BruteDehn {
  std::uint64_t count = 0;
  bool nontrivial     = false;
};

BruteDehn brute_dehn(LinkDiagram const& l, std::uint64_t p) {
  auto cb = checkerboard(l);
  std::size_t faces = l.face_count();
  std::vector<std::uint64_t> c(faces, 0);
  std::vector<std::size_t> free;
  for (std::size_t f = 0; f < faces; ++f) {
    if (f != l.unbounded_face()) {
      free.push_back(f);
    }
  }
  BruteDehn out;
  while (true) {
    bool ok = true;
    for (std::size_t x = 0; x < l.crossing_count() && ok; ++x) {
      std::size_t s = l.under_slot(x);
      auto at = [&](std::size_t j) { return c[l.corner_face(4 * x + (s + j) % 4)]; };
      ok = (at(0) + at(1)) % p == (at(2) + at(3)) % p;
    }
    if (ok) {
      ++out.count;
      bool trivial = true;
      std::optional<std::uint64_t> black;
      for (std::size_t f = 0; f < faces; ++f) {
        if (!cb.is_black(f)) {
          trivial = trivial && c[f] == 0;
        } else if (!black) {
          black = c[f];
        } else {
          trivial = trivial && c[f] == *black;
        }
      }
      out.nontrivial = out.nontrivial || !trivial;
    }
    std::size_t k = 0;
    while (k < free.size() && ++c[free[k]] == p) {
      c[free[k]] = 0;
      ++k;
    }
    if (k == free.size()) {
      break;
    }
  }
  return out;
}

std::uint64_t brute_kernel(IntMatrix const& m, std::uint64_t mod) {
  std::vector<std::uint64_t> x(m.cols(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < m.rows() && ok; ++r) {
      BigInt s = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        s += m(r, c) * x[c];
      }
      ok = s % mod == 0;
    }
    count += ok;
    std::size_t k = 0;
    while (k < x.size() && ++x[k] == mod) {
      x[k] = 0;
      ++k;
    }
    if (k == x.size()) {
      return count;
    }
  }
}

IntMatrix random_matrix(Sampler& s, std::size_t rows, std::size_t cols, long range) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = static_cast<long>(s.uniform(0, 2 * range)) - range;
    }
  }
  return m;
}

bool is_prime(std::uint64_t p) {
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return p >= 2;
}

}  // namespace

TEST_CASE("Smith normal form", "[coloring]") {
  auto id = IntMatrix::identity(3);
  CHECK(smith_normal_form(id).D == id);
  auto snf = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(snf.diagonal() == std::vector<BigInt>{2, 4});
  auto zero = IntMatrix(2, 3);
  CHECK(smith_normal_form(zero).D == zero);

  Sampler s(97);
  for (int k = 0; k < 200; ++k) {
    auto rows = s.uniform(1, 5);
    auto cols = s.uniform(1, 5);
    auto m    = random_matrix(s, rows, cols, 6);
    auto f    = smith_normal_form(m);
    CHECK(f.U * m * f.V == f.D);
    CHECK(f.D.is_diagonal());
    CHECK(abs(bareiss_determinant(f.U)) == 1);
    CHECK(abs(bareiss_determinant(f.V)) == 1);
    auto d = f.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0) {
        CHECK(d[i + 1] % d[i] == 0);
      } else {
        CHECK(d[i + 1] == 0);
      }
    }
  }
}

TEST_CASE("kernel counts modulo m", "[coloring]") {
  Sampler s(101);
  for (int k = 0; k < 60; ++k) {
    auto m = random_matrix(s, s.uniform(1, 4), s.uniform(1, 3), 9);
    for (std::uint64_t mod : {2u, 3u, 4u, 6u, 9u, 15u}) {
      CHECK(kernel_size_mod(m, mod) == brute_kernel(m, mod));
    }
  }
}

TEST_CASE("determinants by elimination", "[coloring]") {
  CHECK(bareiss_determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
  CHECK(bareiss_determinant(IntMatrix::identity(4)) == 1);
  CHECK(bareiss_determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(bareiss_determinant(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
}

TEST_CASE("checkerboards", "[coloring]") {
  auto u  = LinkDiagram::unknot();
  auto cu = checkerboard(u);
  REQUIRE(cu.black.size() == 2);
  CHECK_FALSE(cu.is_black(u.unbounded_face()));
  CHECK(cu.is_black(u.loop_face(0)));

  auto l3 = jones_link(ex3());
  auto c3 = checkerboard(l3);
  CHECK(c3.black.size() == 10);
  CHECK_FALSE(c3.is_black(l3.unbounded_face()));

  auto f  = parse_pd(fig8_pd());
  auto cf = checkerboard(f);
  CHECK(cf.black.size() == 6);
  CHECK(cf.white_count() == 3);
  CHECK_FALSE(cf.is_black(f.unbounded_face()));
  for (std::size_t d = 0; d < f.dart_count(); ++d) {
    auto [a, b] = f.edge_faces(d);
    CHECK(cf.is_black(a) != cf.is_black(b));
  }
}

TEST_CASE("coloring system rows", "[coloring]") {
  auto l = jones_link(ex7());
  ColoringSystem sys(l);
  CHECK(sys.matrix.rows() == l.crossing_count() + 1);
  CHECK(sys.matrix.cols() == l.face_count());
  for (std::size_t r = 0; r < l.crossing_count(); ++r) {
    BigInt sum = 0;
    for (std::size_t c = 0; c < sys.matrix.cols(); ++c) {
      sum += sys.matrix(r, c);
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("triviality", "[coloring]") {
  auto f  = parse_pd(fig8_pd());
  auto cb = checkerboard(f);
  DehnColoring zero{5, std::vector<std::uint64_t>(f.face_count(), 0)};
  CHECK(is_trivial(zero, cb));
  CHECK(is_dehn_coloring(f, zero));
  DehnColoring two{5, std::vector<std::uint64_t>(f.face_count(), 0)};
  for (std::size_t i = 0; i < f.face_count(); ++i) {
    two.faces[i] = cb.is_black(i) ? 2 : 0;
  }
  CHECK(is_trivial(two, cb));
  CHECK(is_dehn_coloring(f, two));
  DehnColoring shorter{5, {0, 0}};
  CHECK_THROWS_AS(is_trivial(shorter, cb), PreconditionViolation);
}

TEST_CASE("Dehn colorings of the fixtures", "[coloring]") {
  auto l3 = jones_link(ex3());
  auto r3 = dehn_colorings(l3, 3);
  CHECK(r3.count == 9);
  REQUIRE(r3.nontrivial.has_value());
  CHECK(is_dehn_coloring(l3, *r3.nontrivial));
  CHECK_FALSE(is_trivial(*r3.nontrivial, checkerboard(l3)));
  auto b3 = brute_dehn(l3, 3);
  CHECK(b3.count == 9);
  CHECK(b3.nontrivial);

  auto l7 = jones_link(ex7());
  auto r7 = dehn_colorings(l7, 7);
  CHECK(r7.count == 49);
  REQUIRE(r7.nontrivial.has_value());
  CHECK(is_dehn_coloring(l7, *r7.nontrivial));

  auto f  = parse_pd(fig8_pd());
  auto f5 = dehn_colorings(f, 5);
  CHECK(f5.count == 25);
  CHECK(f5.nontrivial.has_value());
  auto f3 = dehn_colorings(f, 3);
  CHECK(f3.count == 3);
  CHECK_FALSE(f3.nontrivial.has_value());
  auto bf3 = brute_dehn(f, 3);
  CHECK(bf3.count == 3);
  CHECK_FALSE(bf3.nontrivial);
  CHECK(brute_dehn(f, 5).count == 25);
}

TEST_CASE("Fox counts", "[coloring]") {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    CHECK(fox_colorings_bruteforce(LinkDiagram::unknot(), p) == p);
  }
  CHECK(fox_colorings_bruteforce(jones_link(ex3()), 3) == 9);
  CHECK(fox_colorings_bruteforce(jones_link(ex7()), 7) == 49);
  CHECK(fox_colorings_bruteforce(parse_pd(fig8_pd()), 5) == 25);
  CHECK(fox_colorings_bruteforce(parse_pd(fig8_pd()), 3) == 3);
  CHECK_THROWS_AS(fox_colorings_bruteforce(jones_link(ex7()), 7, 12), SizeLimitExceeded);
}

TEST_CASE("solver agrees with enumeration and with Fox counts", "[coloring]") {
  Sampler s(103);
  for (int k = 0; k < 60; ++k) {
    auto d = s.reduced_diagram(3);
    if (d.caret_count() == 0) {
      continue;
    }
    auto l = jones_link(d);
    for (std::uint64_t p : {3u, 5u}) {
      if (p == 5 && l.face_count() > 8) {
        continue;
      }
      auto r = dehn_colorings(l, p);
      auto b = brute_dehn(l, p);
      CHECK(r.count == b.count);
      CHECK(r.nontrivial.has_value() == b.nontrivial);
    }
  }
  for (int k = 0; k < 80; ++k) {
    auto d = s.reduced_diagram(6);
    if (d.caret_count() == 0) {
      continue;
    }
    auto l = jones_link(d);
    for (std::uint64_t p : {3u, 5u, 7u}) {
      auto r   = dehn_colorings(l, p);
      auto fox = fox_colorings_bruteforce(l, p);
      CHECK(r.count == fox);
      CHECK(r.nontrivial.has_value() == (fox > p));
    }
  }
}

TEST_CASE("determinants", "[coloring]") {
  CHECK(determinant(LinkDiagram::unknot()) == 1);
  CHECK(determinant(jones_link(TreeDiagram::identity())) == 1);
  CHECK(determinant(jones_link(ex3())) == 3);
  CHECK(determinant(jones_link(ex7())) == 7);
  CHECK(determinant(parse_pd(fig8_pd())) == 5);
  CHECK(determinant(jones_link(insert_caret(ex3(), 1), {.allow_nonreduced = true})) == 0);

  Sampler s(107);
  for (int k = 0; k < 150; ++k) {
    auto d = s.reduced_diagram(8);
    if (d.caret_count() == 0) {
      continue;
    }
    auto l   = jones_link(d);
    auto det = determinant(l);
    CHECK(determinant(l.mirror()) == det);
    for (std::uint64_t p : {3u, 5u, 7u, 9u, 15u}) {
      auto r = dehn_colorings(l, p);
      CHECK(dehn_colorings(l.mirror(), p).count == r.count);
      if (is_prime(p)) {
        CHECK(r.nontrivial.has_value() == (det % p == 0));
      }
    }
  }
}

TEST_CASE("members of F_p give p-colorable links", "[coloring]") {
  Sampler s(109);
  for (std::uint64_t p : {3u, 5u, 7u, 9u, 15u}) {
    for (int k = 0; k < 100; ++k) {
      auto d = k % 2 ? s.member(p) : s.member_from_diagram(p);
      REQUIRE(is_member(d, p));
      auto l = jones_link(d);
      auto r = dehn_colorings(l, p);
      REQUIRE(r.nontrivial.has_value());
      CHECK(is_dehn_coloring(l, *r.nontrivial));
      CHECK_FALSE(is_trivial(*r.nontrivial, checkerboard(l)));
    }
  }
}

TEST_CASE("embedded F(2^n) elements give (2^n - 1)-colorable links", "[coloring]") {
  Sampler s(113);
  for (unsigned n : {2u, 3u}) {
    std::uint64_t p = (1u << n) - 1;
    for (int k = 0; k < 40; ++k) {
      auto d = reduce(phi_q(s.reduced_diagram(3, 1u << n), n));
      if (d.caret_count() == 0) {
        continue;
      }
      CHECK(dehn_colorings(jones_link(d), p).nontrivial.has_value());
    }
  }
}

TEST_CASE("colorings read off the strip", "[coloring]") {
  auto l3 = jones_link(ex3());
  auto c3 = coloring_from_strip(ex3(), 3);
  CHECK(is_dehn_coloring(l3, c3));
  CHECK_FALSE(is_trivial(c3, checkerboard(l3)));
  auto l7 = jones_link(ex7());
  auto c7 = coloring_from_strip(ex7(), 7);
  CHECK(is_dehn_coloring(l7, c7));
  CHECK_FALSE(is_trivial(c7, checkerboard(l7)));
  CHECK_THROWS_AS(coloring_from_strip(generator(2, 0), 3), NotInSubgroup);
  CHECK_THROWS_AS(coloring_from_strip(TreeDiagram::identity(), 3), TrivialElement);

  Sampler s(127);
  for (std::uint64_t p : {3u, 5u, 7u, 9u, 15u}) {
    for (int k = 0; k < 40; ++k) {
      auto d = k % 2 ? s.member(p) : s.member_from_diagram(p);
      auto l = jones_link(d);
      auto raw = strip_rule_coloring(d, p);
      CHECK(is_dehn_coloring(l, raw));
      CHECK_FALSE(is_trivial(raw, checkerboard(l)));
      CHECK(raw.faces[l.unbounded_face()] == 0);
      auto c = coloring_from_strip(d, p);
      CHECK(is_dehn_coloring(l, c));
    }
  }
}
