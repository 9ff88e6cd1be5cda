#include "thomp/links.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "thomp/error.hpp"

namespace thomp {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x          = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t ccw_next(std::size_t d) { return 4 * (d / 4) + (d + 1) % 4; }
std::size_t ccw_prev(std::size_t d) { return 4 * (d / 4) + (d + 3) % 4; }
std::size_t opposite(std::size_t d) { return 4 * (d / 4) + (d + 2) % 4; }

// Corner e and corner twin(next(e)) bound the same face.
std::size_t trace_faces(std::vector<std::size_t> const& twin, std::vector<std::size_t>& face) {
  UnionFind uf(twin.size());
  for (std::size_t e = 0; e < twin.size(); ++e) {
    uf.unite(e, twin[ccw_next(e)]);
  }
  std::vector<std::size_t> id(twin.size(), kNone);
  std::size_t count = 0;
  face.assign(twin.size(), 0);
  for (std::size_t e = 0; e < twin.size(); ++e) {
    auto r = uf.find(e);
    if (id[r] == kNone) {
      id[r] = count++;
    }
    face[e] = id[r];
  }
  return count;
}

void check_twins(std::vector<std::size_t> const& twin) {
  if (twin.size() % 4 != 0) {
    throw PreconditionViolation("dart count must be a multiple of 4");
  }
  for (std::size_t d = 0; d < twin.size(); ++d) {
    if (twin[d] >= twin.size() || twin[twin[d]] != d || twin[d] == d) {
      throw PreconditionViolation("twin is not a fixed-point-free involution");
    }
  }
}

struct CaretInfo {
  std::size_t parent = kNone;
  unsigned side      = 0;  // 0 left child, 1 right child of parent
  std::size_t depth  = 0;
  std::size_t first  = 0;
  std::size_t last   = 0;
  std::size_t gap    = 0;
};

struct TreeTable {
  std::vector<CaretInfo> carets;
  std::vector<std::pair<std::size_t, unsigned>> leaf_parent;  // (caret, side)
  std::vector<std::size_t> gap_caret;
};

TreeTable tabulate(NaryTree const& t) {
  TreeTable out;
  struct Open {
    std::size_t id;
    unsigned done;
  };
  std::vector<Open> stack;
  std::size_t leaves = 0;
  auto finish_child  = [&] {
    while (!stack.empty()) {
      auto& top = stack.back();
      if (++top.done == 1) {
        out.carets[top.id].gap = leaves - 1;
        return;
      }
      out.carets[top.id].last = leaves - 1;
      stack.pop_back();
    }
  };
  for (auto node : t.preorder()) {
    if (node) {
      CaretInfo c;
      c.first = leaves;
      if (!stack.empty()) {
        c.parent = stack.back().id;
        c.side   = stack.back().done;
        c.depth  = out.carets[c.parent].depth + 1;
      }
      stack.push_back({out.carets.size(), 0});
      out.carets.push_back(c);
    } else {
      if (stack.empty()) {
        out.leaf_parent.emplace_back(kNone, 0);
      } else {
        out.leaf_parent.emplace_back(stack.back().id, stack.back().done);
      }
      ++leaves;
      finish_child();
    }
  }
  out.gap_caret.assign(out.carets.size(), kNone);
  for (std::size_t c = 0; c < out.carets.size(); ++c) {
    out.gap_caret[out.carets[c].gap] = c;
  }
  return out;
}

// Slot of the child on `side` at a caret of the top or bottom tree.
std::size_t child_slot(bool bottom, unsigned side) {
  if (bottom) {
    return side == 0 ? 3 : 1;
  }
  return side == 0 ? 1 : 3;
}

}  // namespace

PlanarMap::PlanarMap(std::size_t vertex_count, std::vector<std::size_t> twin)
    : vertices_(vertex_count), twin_(std::move(twin)) {
  if (twin_.size() != 4 * vertex_count) {
    throw PreconditionViolation("a 4-valent map needs 4 darts per vertex");
  }
  check_twins(twin_);
  faces_ = trace_faces(twin_, corner_face_);
}

PlanarMap jones_graph(TreeDiagram const& d, JonesOptions options) {
  if (d.arity() != 2) {
    throw ArityMismatch("Jones' construction needs a binary diagram");
  }
  if (d.caret_count() == 0) {
    throw TrivialElement("the identity has no carets; its link is the crossingless unknot");
  }
  if (!options.allow_nonreduced && !is_reduced(d)) {
    throw MustReduce(
        "diagram is not reduced; each removable caret pair adds a split unknot to the link "
        "(reduce first or pass --allow-nonreduced)");
  }
  std::size_t const k = d.caret_count();
  TreeTable top       = tabulate(d.domain());
  TreeTable bot       = tabulate(d.range());

  std::vector<std::size_t> twin(8 * k, kNone);
  auto dart = [k](bool bottom, std::size_t caret, std::size_t slot) {
    return 4 * (caret + (bottom ? k : 0)) + slot;
  };
  auto join = [&twin](std::size_t a, std::size_t b) {
    twin[a] = b;
    twin[b] = a;
  };

  for (bool bottom : {false, true}) {
    auto const& tab = bottom ? bot : top;
    for (std::size_t c = 0; c < k; ++c) {
      auto const& info = tab.carets[c];
      if (info.parent != kNone) {
        join(dart(bottom, info.parent, child_slot(bottom, info.side)), dart(bottom, c, 0));
      }
    }
  }
  for (std::size_t leaf = 0; leaf <= k; ++leaf) {
    auto [tc, ts] = top.leaf_parent[leaf];
    auto [bc, bs] = bot.leaf_parent[leaf];
    join(dart(false, tc, child_slot(false, ts)), dart(true, bc, child_slot(true, bs)));
  }
  for (std::size_t gap = 0; gap < k; ++gap) {
    join(dart(false, top.gap_caret[gap], 2), dart(true, bot.gap_caret[gap], 2));
  }
  join(dart(false, 0, 0), dart(true, 0, 0));

  PlanarMap m(2 * k, std::move(twin));
  m.carets_per_tree = k;
  for (bool bottom : {false, true}) {
    auto const& tab = bottom ? bot : top;
    for (std::size_t c = 0; c < k; ++c) {
      auto const& info = tab.carets[c];
      m.vertex_origin.push_back({bottom, c, info.depth, info.first, info.last, info.gap});
    }
  }
  for (std::size_t gap = 0; gap < k; ++gap) {
    m.gap_left_face.push_back(m.corner_face(dart(false, top.gap_caret[gap], 1)));
    m.gap_right_face.push_back(m.corner_face(dart(false, top.gap_caret[gap], 2)));
  }
  m.outer_face     = m.corner_face(dart(false, 0, 0));
  m.unbounded_face = m.corner_face(dart(false, 0, 3));
  return m;
}

LinkDiagram::LinkDiagram(std::vector<std::size_t> twin, std::vector<std::uint8_t> under_slot,
                         std::size_t free_loops, std::size_t unbounded_corner)
    : twin_(std::move(twin)), under_(std::move(under_slot)), free_loops_(free_loops) {
  check_twins(twin_);
  if (twin_.size() != 4 * under_.size()) {
    throw PreconditionViolation("one under-strand flag per crossing");
  }
  for (auto s : under_) {
    if (s > 1) {
      throw PreconditionViolation("under slot must be 0 or 1");
    }
  }
  std::size_t traced = 0;
  if (!twin_.empty()) {
    traced = trace_faces(twin_, corner_face_);
    if (unbounded_corner >= twin_.size()) {
      throw PreconditionViolation("unbounded corner out of range");
    }
    unbounded_        = corner_face_[unbounded_corner];
    unbounded_corner_ = unbounded_corner;
  } else {
    traced     = 1;
    unbounded_ = 0;
  }
  faces_ = traced + free_loops_;
}

std::pair<std::size_t, std::size_t> LinkDiagram::edge_faces(std::size_t dart) const {
  return {corner_face_[ccw_prev(dart)], corner_face_[dart]};
}

LinkDiagram LinkDiagram::with_edge_labels(std::vector<std::size_t> labels) const {
  if (labels.size() != twin_.size()) {
    throw PreconditionViolation("one edge label per dart");
  }
  for (std::size_t d = 0; d < labels.size(); ++d) {
    if (labels[d] != labels[twin_[d]]) {
      throw PreconditionViolation("twin darts must carry the same label");
    }
  }
  LinkDiagram l = *this;
  l.labels_     = std::move(labels);
  return l;
}

LinkDiagram LinkDiagram::mirror() const {
  LinkDiagram m = *this;
  m.labels_.clear();
  for (auto& s : m.under_) {
    s ^= 1u;
  }
  return m;
}

LinkDiagram link_diagram(PlanarMap const& m, CrossingRule rule) {
  std::vector<std::uint8_t> under(m.vertex_count(), 0);
  if (rule == CrossingRule::kChildOverTopUnderBottom) {
    for (std::size_t v = m.carets_per_tree; v < m.vertex_count(); ++v) {
      under[v] = 1;
    }
  }
  std::size_t unbounded_corner = 0;
  if (m.unbounded_face != kNone) {
    while (m.corner_face(unbounded_corner) != m.unbounded_face) {
      ++unbounded_corner;
    }
  }
  return LinkDiagram(m.twins(), std::move(under), 0, unbounded_corner);
}

LinkDiagram jones_link(TreeDiagram const& d, JonesOptions options, CrossingRule rule) {
  if (d.arity() == 2 && d.caret_count() == 0) {
    return LinkDiagram::unknot();
  }
  return link_diagram(jones_graph(d, options), rule);
}

std::size_t components(LinkDiagram const& l) {
  std::size_t const n = l.dart_count();
  UnionFind uf(n);
  for (std::size_t d = 0; d < n; ++d) {
    uf.unite(d, l.twin(d));
    uf.unite(d, opposite(d));
  }
  std::size_t count = 0;
  for (std::size_t d = 0; d < n; ++d) {
    count += uf.find(d) == d ? 1 : 0;
  }
  return count + l.free_loops();
}

std::string pd_code(LinkDiagram const& l) {
  std::size_t const n = l.dart_count();
  bool const keep     = !l.edge_labels().empty();
  std::vector<std::size_t> label(n, 0);
  std::vector<bool> incoming(n, false);
  if (keep) {
    label = l.edge_labels();
  } else {
    std::size_t next = 1;
    for (std::size_t start = 0; start < n; ++start) {
      if (label[start] != 0) {
        continue;
      }
      std::size_t cur = start;
      do {
        auto t      = l.twin(cur);
        label[cur]  = next;
        label[t]    = next;
        incoming[t] = true;
        ++next;
        cur = opposite(t);
      } while (cur != start);
    }
  }

  std::ostringstream body;
  std::vector<std::size_t> first_slot(l.crossing_count());
  body << "PD[";
  for (std::size_t c = 0; c < l.crossing_count(); ++c) {
    std::size_t in = 4 * c + l.under_slot(c);
    if (!keep && !incoming[in]) {
      in = opposite(in);
    }
    first_slot[c] = in % 4;
    body << (c ? "," : "") << "X[";
    for (std::size_t j = 0; j < 4; ++j) {
      body << (j ? "," : "") << label[4 * c + (in + j) % 4];
    }
    body << "]";
  }
  body << "]";

  std::ostringstream out;
  out << "# thomp pd v1\n# components " << components(l) << "\n";
  if (l.crossing_count() > 0) {
    std::size_t d = l.unbounded_corner();
    if (d == kNone) {
      d = 0;
      while (l.corner_face(d) != l.unbounded_face()) {
        ++d;
      }
    }
    std::size_t c = d / 4;
    out << "# unbounded " << c << " " << (d % 4 + 4 - first_slot[c]) % 4 << "\n";
  }
  out << body.str() << "\n";
  return out.str();
}

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view s, std::size_t offset) : s_(s), offset_(offset) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(std::string_view token) {
    skip_space();
    if (s_.substr(pos_, token.size()) != token) {
      throw ParseError("expected '" + std::string(token) + "'", offset_ + pos_);
    }
    pos_ += token.size();
  }
  std::size_t number() {
    skip_space();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      ++pos_;
    }
    if (start == pos_ || value == 0) {
      throw ParseError("expected a positive edge label", offset_ + start);
    }
    return value;
  }
  bool at_end() {
    skip_space();
    return pos_ == s_.size();
  }
  std::size_t position() const { return offset_ + pos_; }

 private:
  std::string_view s_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  std::optional<std::size_t> annotated_components;
  std::optional<std::pair<std::size_t, std::size_t>> unbounded_at;
  std::string body;
  std::size_t body_offset = kNone;
  std::size_t line_start  = 0;
  while (line_start <= text.size()) {
    auto end = text.find('\n', line_start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    auto line = text.substr(line_start, end - line_start);
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] == '#') {
      std::istringstream in{std::string(line.substr(first + 1))};
      std::string key;
      in >> key;
      if (key == "components") {
        std::size_t n = 0;
        if (!(in >> n)) {
          throw ParseError("bad components annotation", line_start);
        }
        annotated_components = n;
      } else if (key == "unbounded") {
        std::size_t c = 0, s = 0;
        if (!(in >> c >> s) || s > 3) {
          throw ParseError("bad unbounded annotation", line_start);
        }
        unbounded_at = std::make_pair(c, s);
      }
    } else {
      if (body_offset == kNone && first != std::string_view::npos) {
        body_offset = line_start;
      }
      body.append(line);
      body.push_back(' ');
    }
    line_start = end + 1;
  }
  if (body_offset == kNone) {
    throw ParseError("no PD code found", text.size());
  }

  PdScanner sc(body, body_offset);
  sc.expect("PD[");
  std::vector<std::array<std::size_t, 4>> xs;
  while (!sc.peek(']')) {
    if (!xs.empty()) {
      sc.expect(",");
    }
    sc.expect("X[");
    std::array<std::size_t, 4> x{};
    for (std::size_t j = 0; j < 4; ++j) {
      if (j) {
        sc.expect(",");
      }
      x[j] = sc.number();
    }
    sc.expect("]");
    xs.push_back(x);
  }
  sc.expect("]");
  if (!sc.at_end()) {
    throw ParseError("trailing text after PD code", sc.position());
  }

  if (xs.empty()) {
    return LinkDiagram({}, {}, annotated_components.value_or(1), kNone);
  }

  std::map<std::size_t, std::vector<std::size_t>> where;
  for (std::size_t c = 0; c < xs.size(); ++c) {
    for (std::size_t j = 0; j < 4; ++j) {
      where[xs[c][j]].push_back(4 * c + j);
    }
  }
  std::vector<std::size_t> twin(4 * xs.size(), kNone);
  for (auto const& [lab, darts] : where) {
    if (darts.size() != 2) {
      throw ParseError("edge label " + std::to_string(lab) + " occurs "
                           + std::to_string(darts.size()) + " times",
                       body_offset);
    }
    twin[darts[0]] = darts[1];
    twin[darts[1]] = darts[0];
  }

  UnionFind uf(xs.size());
  for (std::size_t d = 0; d < twin.size(); ++d) {
    uf.unite(d / 4, twin[d] / 4);
  }
  for (std::size_t c = 0; c < xs.size(); ++c) {
    if (uf.find(c) != uf.find(0)) {
      throw ParseError("PD code describes a split diagram; only connected projections are supported",
                       body_offset);
    }
  }
  std::vector<std::size_t> face;
  long v = static_cast<long>(xs.size());
  long f = static_cast<long>(trace_faces(twin, face));
  if (v - 2 * v + f != 2) {
    throw ParseError("PD code is not planar (V - E + F = " + std::to_string(f - v) + ")",
                     body_offset);
  }

  std::size_t unbounded_corner = 0;
  if (unbounded_at) {
    if (unbounded_at->first >= xs.size()) {
      throw ParseError("unbounded annotation names a missing crossing", 0);
    }
    unbounded_corner = 4 * unbounded_at->first + unbounded_at->second;
  } else {
    std::vector<std::size_t> sides(static_cast<std::size_t>(f), 0);
    for (auto fc : face) {
      ++sides[fc];
    }
    auto best = static_cast<std::size_t>(std::max_element(sides.begin(), sides.end()) - sides.begin());
    while (face[unbounded_corner] != best) {
      ++unbounded_corner;
    }
  }

  std::vector<std::size_t> labels(4 * xs.size());
  for (std::size_t c = 0; c < xs.size(); ++c) {
    for (std::size_t j = 0; j < 4; ++j) {
      labels[4 * c + j] = xs[c][j];
    }
  }
  LinkDiagram l(std::move(twin), std::vector<std::uint8_t>(xs.size(), 0), 0, unbounded_corner);
  if (annotated_components) {
    std::size_t traced = components(l);
    if (*annotated_components < traced) {
      throw ParseError("component annotation is smaller than the traced count", 0);
    }
    if (*annotated_components > traced) {
      l = LinkDiagram(l.twins(), std::vector<std::uint8_t>(xs.size(), 0),
                      *annotated_components - traced, unbounded_corner);
    }
  }
  return l.with_edge_labels(std::move(labels));
}

TreeDiagram spine_element(unsigned q) {
  if (q < 2) {
    throw PreconditionViolation("spine_element needs q >= 2");
  }
  return reduce(phi_q(generator(1u << q, 0), q));
}

}  // namespace thomp
