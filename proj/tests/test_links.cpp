#include <deque>
#include <string>
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

std::size_t across(std::size_t d) {
  return 4 * (d / 4) + (d % 4 + 2) % 4;
}

// Walk strands: leave along d, arrive at twin(d), go straight through.
std::size_t count_components(LinkDiagram const& l) {
  std::vector<bool> seen(l.dart_count(), false);
  std::size_t count = l.free_loops();
  for (std::size_t d = 0; d < l.dart_count(); ++d) {
    if (seen[d]) {
      continue;
    }
    ++count;
    std::size_t cur = d;
    do {
      seen[cur]          = true;
      seen[l.twin(cur)]  = true;
      cur                = across(l.twin(cur));
    } while (cur != d);
  }
  return count;
}

// Two-colors faces across edges by BFS; false on an odd cycle.
bool faces_bipartite(LinkDiagram const& l) {
  std::vector<int> color(l.face_count(), -1);
  std::vector<std::vector<std::size_t>> adj(l.face_count());
  for (std::size_t d = 0; d < l.dart_count(); ++d) {
    auto [a, b] = l.edge_faces(d);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (std::size_t s = 0; s < l.face_count(); ++s) {
    if (color[s] >= 0) {
      continue;
    }
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto f = queue.front();
      queue.pop_front();
      for (auto g : adj[f]) {
        if (color[g] < 0) {
          color[g] = 1 - color[f];
          queue.push_back(g);
        } else if (color[g] == color[f]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Isomorphism of connected diagrams: a dart bijection that respects twins,
// the counterclockwise order at crossings, over/under and the unbounded face.
bool isomorphic(LinkDiagram const& a, LinkDiagram const& b) {
  if (a.dart_count() != b.dart_count() || a.free_loops() != b.free_loops()) {
    return false;
  }
  if (a.dart_count() == 0) {
    return true;
  }
  std::size_t n = a.dart_count();
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> map(n, kNone);
    std::deque<std::size_t> queue;
    map[0] = start;
    queue.push_back(0);
    bool ok = true;
    auto assign = [&](std::size_t x, std::size_t y) {
      if (map[x] == kNone) {
        map[x] = y;
        queue.push_back(x);
      } else if (map[x] != y) {
        ok = false;
      }
    };
    while (ok && !queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      auto y = map[x];
      if (a.is_under(x) != b.is_under(y)) {
        ok = false;
        break;
      }
      assign(a.twin(x), b.twin(y));
      assign(4 * (x / 4) + (x + 1) % 4, 4 * (y / 4) + (y + 1) % 4);
    }
    if (!ok) {
      continue;
    }
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = (a.corner_face(x) == a.unbounded_face()) == (b.corner_face(map[x]) == b.unbounded_face());
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("graph sizes", "[links]") {
  auto m0 = jones_graph(generator(2, 0));
  CHECK(m0.vertex_count() == 4);
  CHECK(m0.edge_count() == 8);
  CHECK(m0.face_count() == 6);
  auto m3 = jones_graph(ex3());
  CHECK(m3.vertex_count() == 8);
  CHECK(m3.edge_count() == 16);
  CHECK(m3.face_count() == 10);
  auto single = TreeDiagram(NaryTree::caret(), NaryTree::caret());
  auto m1 = jones_graph(single, {.allow_nonreduced = true});
  CHECK(m1.vertex_count() == 2);
  CHECK(m1.edge_count() == 4);
  CHECK(m1.face_count() == 4);
  CHECK_THROWS_AS(jones_graph(single), MustReduce);
  CHECK_THROWS_AS(jones_graph(TreeDiagram::identity()), TrivialElement);
  CHECK_THROWS_AS(jones_graph(generator(3, 0)), ArityMismatch);
}

TEST_CASE("graphs are planar with the expected counts", "[links]") {
  Sampler s(79);
  for (int k = 0; k < 500; ++k) {
    auto d = s.reduced_diagram(10);
    if (d.caret_count() == 0) {
      continue;
    }
    auto m = jones_graph(d);
    auto c = d.caret_count();
    CHECK(m.euler_characteristic() == 2);
    CHECK(m.vertex_count() == 2 * c);
    CHECK(m.edge_count() == 4 * c);
    CHECK(m.face_count() == 2 * c + 2);
    for (std::size_t x = 0; x < m.dart_count(); ++x) {
      CHECK(m.twin(m.twin(x)) == x);
      CHECK(m.twin(x) != x);
    }
    REQUIRE(m.gap_left_face.size() == c);
    CHECK(m.outer_face != m.unbounded_face);
    auto l = link_diagram(m);
    CHECK(l.crossing_count() == 2 * c);
    CHECK(faces_bipartite(l));
    CHECK(components(l) == count_components(l));
    CHECK(components(l) >= 1);
  }
}

TEST_CASE("knot fixtures", "[links]") {
  auto l3 = jones_link(ex3());
  CHECK(l3.crossing_count() == 8);
  CHECK(components(l3) == 1);
  auto l7 = jones_link(ex7());
  CHECK(l7.crossing_count() == 16);
  CHECK(components(l7) == 1);
  CHECK(count_components(l7) == 1);
  // Both fixtures are embedded generators.
  CHECK(reduce(phi_q(generator(4, 1), 2)) == ex3());
  CHECK(reduce(phi_q(generator(8, 2), 3)) == ex7());
}

TEST_CASE("the identity gives the unknot", "[links]") {
  auto u = jones_link(TreeDiagram::identity());
  CHECK(u.crossing_count() == 0);
  CHECK(components(u) == 1);
  CHECK(u.face_count() == 2);
}

TEST_CASE("a removable caret pair adds a split unknot", "[links]") {
  auto l = jones_link(insert_caret(ex3(), 2), {.allow_nonreduced = true});
  CHECK(components(l) == 2);
  CHECK(l.crossing_count() == 10);

  Sampler s(83);
  for (int k = 0; k < 200; ++k) {
    auto d = s.reduced_diagram(8);
    if (d.caret_count() == 0) {
      continue;
    }
    auto before = components(jones_link(d));
    auto e      = insert_caret(d, s.uniform(0, d.leaf_count() - 1));
    auto after  = jones_link(e, {.allow_nonreduced = true});
    CHECK(components(after) == before + 1);
    CHECK(count_components(after) == before + 1);
    CHECK_THROWS_AS(jones_link(e), MustReduce);
  }
}

TEST_CASE("mirror images", "[links]") {
  auto l = jones_link(ex7());
  auto m = l.mirror();
  CHECK(components(m) == components(l));
  CHECK(m.mirror().crossing_count() == l.crossing_count());
  CHECK(isomorphic(m.mirror(), l));
  for (std::size_t d = 0; d < l.dart_count(); ++d) {
    CHECK(m.is_under(d) != l.is_under(d));
  }
  auto other = jones_link(ex7(), {}, CrossingRule::kChildOverTopUnderBottom);
  CHECK(components(other) == 1);
  CHECK_FALSE(isomorphic(other, l));
}

TEST_CASE("PD codes", "[links]") {
  auto u = pd_code(LinkDiagram::unknot());
  CHECK(u.find("PD[]") != std::string::npos);
  CHECK(u.find("# components 1") != std::string::npos);
  CHECK(components(parse_pd(u)) == 1);

  auto f = parse_pd(fig8_pd());
  CHECK(f.crossing_count() == 4);
  CHECK(components(f) == 1);
  CHECK(isomorphic(parse_pd(pd_code(f)), f));

  auto x0 = jones_link(generator(2, 0));
  auto code = pd_code(x0);
  CHECK(code.find("# components " + std::to_string(components(x0))) != std::string::npos);
  CHECK(parse_pd(code).crossing_count() == 4);

  // Bare code without annotations.
  auto bare = parse_pd("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]");
  CHECK(bare.crossing_count() == 3);
  CHECK(pd_code(bare).find("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]") != std::string::npos);
  CHECK(pd_code(bare.mirror()).find("PD[X[1,5,2,4]") == std::string::npos);
  CHECK(components(bare) == 1);
}

TEST_CASE("PD round trip is an isomorphism", "[links]") {
  Sampler s(89);
  for (int k = 0; k < 100; ++k) {
    auto d = k % 2 ? s.reduced_diagram(8) : s.member_from_diagram(3);
    if (d.caret_count() == 0) {
      continue;
    }
    auto l = jones_link(d);
    auto r = parse_pd(pd_code(l));
    CHECK(isomorphic(r, l));
    CHECK(pd_code(r) == pd_code(l));
    CHECK(components(r) == components(l));
    CHECK(r.unbounded_face() < r.face_count());
  }
  auto split = jones_link(insert_caret(ex3(), 0), {.allow_nonreduced = true});
  auto r     = parse_pd(pd_code(split));
  CHECK(components(r) == 2);
  CHECK(isomorphic(r, split));
}

TEST_CASE("malformed PD codes", "[links]") {
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,3]]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,1,2,2],X[2,3,3,4]]"), ParseError);  // label 2 three times
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,1,2]]"), ParseError);             // not planar
  CHECK_THROWS_AS(parse_pd("PD[X[1,1,2,2]] extra"), ParseError);
  CHECK_THROWS_AS(parse_pd("# only a comment\n"), ParseError);
  try {
    parse_pd("PD[X[1,2,x,4]]");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("spine elements", "[links]") {
  auto s2 = spine_element(2);
  CHECK(s2 == reduce(phi_q(generator(4, 0), 2)));
  CHECK(is_member(s2, 3));
  CHECK_FALSE(is_member(s2, 5));
  auto s3 = spine_element(3);
  CHECK(is_member(s3, 7));
  CHECK(is_member(spine_element(4), 5));
  CHECK(is_member(spine_element(4), 15));
  CHECK(is_member(spine_element(4), 3));
  CHECK(components(jones_link(s2)) == 3);
  CHECK(components(jones_link(s3)) == 5);
  CHECK_THROWS_AS(spine_element(1), PreconditionViolation);
}
