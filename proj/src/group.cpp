#include "thomp/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

#include "thomp/error.hpp"
#include "thomp/fp.hpp"

namespace thomp {

////////////////////////////////////////////////////////////////////////
// TreeDiagram
////////////////////////////////////////////////////////////////////////

TreeDiagram::TreeDiagram(NaryTree domain, NaryTree range)
    : domain_(std::move(domain)), range_(std::move(range)) {
  if (domain_.arity() != range_.arity()) {
    throw ArityMismatch("tree diagram: trees have arities " + std::to_string(domain_.arity())
                        + " and " + std::to_string(range_.arity()));
  }
  if (domain_.caret_count() != range_.caret_count()) {
    throw InvalidPartition("tree diagram: trees have " + std::to_string(domain_.caret_count())
                           + " and " + std::to_string(range_.caret_count()) + " carets");
  }
}

TreeDiagram TreeDiagram::identity(unsigned arity) {
  return TreeDiagram(NaryTree(arity), NaryTree(arity));
}

TreeDiagram TreeDiagram::parse(std::string_view text, unsigned default_arity) {
  // Skip comment lines and surrounding whitespace.
  std::size_t offset = 0;
  while (offset < text.size()) {
    while (offset < text.size() && std::isspace(static_cast<unsigned char>(text[offset]))) {
      ++offset;
    }
    if (offset < text.size() && text[offset] == '#') {
      auto nl = text.find('\n', offset);
      offset  = nl == std::string_view::npos ? text.size() : nl + 1;
      continue;
    }
    break;
  }
  std::size_t end = text.size();
  while (end > offset && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  auto body = text.substr(offset, end - offset);
  auto bar  = body.find('|');
  if (bar == std::string_view::npos) {
    throw ParseError("expected '<tree>|<tree>'", offset + body.size());
  }
  auto parse_side = [&](std::string_view s, std::size_t base) {
    try {
      return NaryTree::parse(s, default_arity);
    } catch (ParseError const& e) {
      throw ParseError("bad tree expression", base + e.position());
    }
  };
  NaryTree dom = parse_side(body.substr(0, bar), offset);
  NaryTree ran = parse_side(body.substr(bar + 1), offset + bar + 1);
  // A single-leaf side takes the arity of the other side.
  if (dom.is_leaf() && !ran.is_leaf()) {
    dom = NaryTree(ran.arity());
  } else if (ran.is_leaf() && !dom.is_leaf()) {
    ran = NaryTree(dom.arity());
  }
  return TreeDiagram(std::move(dom), std::move(ran));
}

TreeDiagram TreeDiagram::from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("domain") || !j.contains("range")) {
    throw ParseError("element JSON needs keys n, domain, range", 0);
  }
  auto n = j.at("n").get<unsigned>();
  auto dom = NaryTree::parse(j.at("domain").get<std::string>(), n);
  auto ran = NaryTree::parse(j.at("range").get<std::string>(), n);
  if (dom.arity() != n || ran.arity() != n) {
    throw ArityMismatch("element JSON: trees do not have arity " + std::to_string(n));
  }
  return TreeDiagram(std::move(dom), std::move(ran));
}

std::string TreeDiagram::to_string() const {
  return domain_.to_string() + "|" + range_.to_string();
}

std::string TreeDiagram::to_json() const {
  nlohmann::json j;
  j["n"]      = arity();
  j["domain"] = domain_.to_string();
  j["range"]  = range_.to_string();
  return j.dump();
}

////////////////////////////////////////////////////////////////////////
// GroupWord
////////////////////////////////////////////////////////////////////////

GroupWord::GroupWord(unsigned arity, std::vector<Letter> letters)
    : arity_(arity), letters_(std::move(letters)) {
  if (arity_ < 2 || arity_ > kMaxArity) {
    throw ArityMismatch("group word arity must lie in [2, 256]");
  }
  for (auto const& l : letters_) {
    if (l.exponent == 0) {
      throw Error("group word exponents must be nonzero");
    }
  }
}

GroupWord GroupWord::parse(std::string_view text, unsigned arity) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) -> long {
    std::size_t start = i;
    bool neg          = false;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected a number", i);
    }
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000000L) {
        throw ParseError("number too large", start);
      }
      ++i;
    }
    return neg ? -v : v;
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != 'x') {
      throw ParseError(std::string("expected 'x', got '") + text[i] + "'", i);
    }
    ++i;
    auto index = static_cast<unsigned>(read_int(false));
    long exp   = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t at = i;
      exp            = read_int(true);
      if (exp == 0) {
        throw ParseError("exponent must be nonzero", at);
      }
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected whitespace between generators", i);
    }
    letters.push_back({index, exp});
  }
  return GroupWord(arity, std::move(letters));
}

std::string GroupWord::to_string() const {
  std::string s;
  for (auto const& l : letters_) {
    if (!s.empty()) {
      s += ' ';
    }
    s += 'x' + std::to_string(l.index);
    if (l.exponent != 1) {
      s += '^' + std::to_string(l.exponent);
    }
  }
  return s;
}

////////////////////////////////////////////////////////////////////////
// PLMap
////////////////////////////////////////////////////////////////////////

namespace {

  // log2(dy/dx), or throws if the ratio is not a power of two.
  int slope_log2(Dyadic const& dx, Dyadic const& dy) {
    if (dx.numerator() <= 0 || dy.numerator() <= 0) {
      throw InvalidPartition("PL map breakpoints must be strictly increasing");
    }
    if (dx.numerator() != dy.numerator()) {
      throw InvalidPartition("PL map slope is not a power of two");
    }
    return static_cast<int>(dx.exponent()) - static_cast<int>(dy.exponent());
  }

}  // namespace

PLMap::PLMap(std::vector<std::pair<Dyadic, Dyadic>> breakpoints) {
  if (breakpoints.size() < 2 || breakpoints.front() != std::pair{Dyadic(0), Dyadic(0)}
      || breakpoints.back() != std::pair{Dyadic(1), Dyadic(1)}) {
    throw InvalidPartition("PL map must fix 0 and 1");
  }
  points_.push_back(breakpoints.front());
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    auto const& [x0, y0] = points_.back();
    auto const& [x1, y1] = breakpoints[i];
    int s                = slope_log2(x1 - x0, y1 - y0);
    if (!slopes_.empty() && slopes_.back() == s) {
      // Collinear with the previous segment.
      points_.back() = breakpoints[i];
      continue;
    }
    slopes_.push_back(s);
    points_.push_back(breakpoints[i]);
  }
}

Dyadic PLMap::operator()(Dyadic const& x) const {
  if (x < Dyadic(0) || x > Dyadic(1)) {
    throw IndexOutOfRange("PL map argument outside [0, 1]: " + x.to_string());
  }
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](Dyadic const& v, auto const& pt) { return v < pt.first; });
  if (it == points_.end()) {
    return points_.back().second;
  }
  auto seg = static_cast<std::size_t>(std::distance(points_.begin(), it)) - 1;
  return points_[seg].second + (x - points_[seg].first).scaled(slopes_[seg]);
}

////////////////////////////////////////////////////////////////////////
// Group operations
////////////////////////////////////////////////////////////////////////

TreeDiagram reduce(TreeDiagram const& d) {
  NaryTree dom = d.domain();
  NaryTree ran = d.range();
  while (true) {
    auto a = exposed_carets(dom);
    auto b = exposed_carets(ran);
    std::vector<std::size_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      break;
    }
    // Right to left so earlier leaf indices stay valid.
    for (auto it = common.rbegin(); it != common.rend(); ++it) {
      dom = contract(dom, *it);
      ran = contract(ran, *it);
    }
  }
  return TreeDiagram(std::move(dom), std::move(ran));
}

bool is_reduced(TreeDiagram const& d) {
  auto a = exposed_carets(d.domain());
  auto b = exposed_carets(d.range());
  std::vector<std::size_t> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

TreeDiagram insert_caret(TreeDiagram const& d, std::size_t leaf_index) {
  auto c = NaryTree::caret(d.arity());
  return TreeDiagram(attach(d.domain(), leaf_index, c), attach(d.range(), leaf_index, c));
}

TreeDiagram multiply(TreeDiagram const& a, TreeDiagram const& b) {
  if (a.arity() != b.arity()) {
    throw ArityMismatch("multiply: arities " + std::to_string(a.arity()) + " and "
                        + std::to_string(b.arity()));
  }
  auto r = refine(a.range(), b.domain());
  return reduce(TreeDiagram(substitute_leaves(a.domain(), r.first_parts),
                            substitute_leaves(b.range(), r.second_parts)));
}

TreeDiagram inverse(TreeDiagram const& d) {
  return TreeDiagram(d.range(), d.domain());
}

TreeDiagram power(TreeDiagram const& d, long exponent) {
  TreeDiagram base   = exponent < 0 ? inverse(d) : d;
  unsigned long e    = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                    : static_cast<unsigned long>(exponent);
  TreeDiagram result = TreeDiagram::identity(d.arity());
  while (e > 0) {
    if (e & 1) {
      result = multiply(result, base);
    }
    e >>= 1;
    if (e > 0) {
      base = multiply(base, base);
    }
  }
  return result;
}

TreeDiagram conjugate(TreeDiagram const& x, TreeDiagram const& y) {
  return multiply(multiply(inverse(y), x), y);
}

TreeDiagram generator(unsigned n, unsigned i) {
  if (n < 2 || n > kMaxArity) {
    throw ArityMismatch("generator: arity must lie in [2, 256]");
  }
  // n - 1 generators per spine level: x_{k(n-1)+r} lives at depth k.
  unsigned const level = i / (n - 1);
  unsigned const slot  = i % (n - 1);
  std::vector<std::uint8_t> dom;
  std::vector<std::uint8_t> ran;
  for (unsigned j = 0; j <= level; ++j) {
    for (auto* t : {&dom, &ran}) {
      t->push_back(1);
    }
    if (j < level) {
      dom.insert(dom.end(), n - 1, 0);
      ran.insert(ran.end(), n - 1, 0);
    }
  }
  // Extra caret on child `slot` in the domain and on the last child in the range.
  dom.insert(dom.end(), slot, 0);
  dom.push_back(1);
  dom.insert(dom.end(), n, 0);
  dom.insert(dom.end(), n - 1 - slot, 0);
  ran.insert(ran.end(), n - 1, 0);
  ran.push_back(1);
  ran.insert(ran.end(), n, 0);
  return TreeDiagram(NaryTree::from_preorder(n, std::move(dom)),
                     NaryTree::from_preorder(n, std::move(ran)));
}

TreeDiagram evaluate_word(GroupWord const& w) {
  unsigned const n = w.arity();
  std::map<unsigned, TreeDiagram> cache;
  auto x0          = generator(n, 0);
  auto x0inv       = inverse(x0);
  // Iterative expansion of x_j = x0^-1 x_{j-n+1} x0.
  auto gen = [&](unsigned j) -> TreeDiagram {
    if (auto it = cache.find(j); it != cache.end()) {
      return it->second;
    }
    unsigned base  = j;
    unsigned depth = 0;
    while (base >= n) {
      base -= n - 1;
      ++depth;
    }
    TreeDiagram g = generator(n, base);
    for (unsigned k = 0; k < depth; ++k) {
      g = multiply(multiply(x0inv, g), x0);
    }
    cache.emplace(j, g);
    return g;
  };
  TreeDiagram result = TreeDiagram::identity(n);
  for (auto const& l : w.letters()) {
    result = multiply(result, power(gen(l.index), l.exponent));
  }
  return result;
}

PLMap pl_map(TreeDiagram const& d) {
  if (d.arity() != 2) {
    throw ArityMismatch("pl_map is defined for binary diagrams");
  }
  auto dom = leaf_words(d.domain());
  auto ran = leaf_words(d.range());
  std::vector<std::pair<Dyadic, Dyadic>> pts;
  pts.reserve(dom.size() + 1);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    pts.emplace_back(rho(dom[i]), rho(ran[i]));
  }
  pts.emplace_back(Dyadic(1), Dyadic(1));
  return PLMap(std::move(pts));
}

namespace {

  std::size_t phi_rec(std::span<std::uint8_t const> in, std::size_t pos, unsigned q,
                      std::vector<std::uint8_t>& out);

  // Emits the complete depth-q binary tree whose leaves are the next 2^q
  // input subtrees.
  std::size_t emit_block(std::span<std::uint8_t const> in, std::size_t pos, unsigned depth,
                         unsigned q, std::vector<std::uint8_t>& out) {
    if (depth == q) {
      return phi_rec(in, pos, q, out);
    }
    out.push_back(1);
    pos = emit_block(in, pos, depth + 1, q, out);
    return emit_block(in, pos, depth + 1, q, out);
  }

  std::size_t phi_rec(std::span<std::uint8_t const> in, std::size_t pos, unsigned q,
                      std::vector<std::uint8_t>& out) {
    if (!in[pos]) {
      out.push_back(0);
      return pos + 1;
    }
    return emit_block(in, pos + 1, 0, q, out);
  }

  NaryTree phi_tree(NaryTree const& t, unsigned q) {
    std::vector<std::uint8_t> out;
    phi_rec(t.preorder(), 0, q, out);
    return NaryTree::from_preorder(2, std::move(out));
  }

  void check_block_size(unsigned q) {
    if (q < 1 || q > 8) {
      throw ArityMismatch("block depth q must lie in [1, 8]");
    }
  }

  // Contracts blocks of 2^q sibling leaves (each forming a complete depth-q
  // tree), always at the leftmost leaf of maximal length.
  NaryTree peel_blocks(NaryTree const& t, unsigned q) {
    unsigned const big    = 1u << q;
    std::vector<Word> words = leaf_words(t);
    std::vector<NaryTree> holders(words.size(), NaryTree(big));
    while (words.size() > 1) {
      std::size_t m = 0;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (words[i].length() > words[m].length()) {
          m = i;
        }
      }
      std::size_t len = words[m].length();
      if (len < q || m + big > words.size()) {
        throw NotInSubgroup("leaf " + words[m].to_string() + " does not head a block of "
                            + std::to_string(big) + " leaves");
      }
      std::vector<std::uint8_t> prefix(words[m].letters().begin(),
                                       words[m].letters().end() - q);
      std::vector<std::uint8_t> nodes{1};
      for (unsigned j = 0; j < big; ++j) {
        auto const& w = words[m + j];
        bool ok       = w.length() == len
                  && std::equal(prefix.begin(), prefix.end(), w.letters().begin());
        for (unsigned b = 0; ok && b < q; ++b) {
          ok = w[len - q + b] == ((j >> (q - 1 - b)) & 1u);
        }
        if (!ok) {
          throw NotInSubgroup("leaves from " + words[m].to_string()
                              + " do not form a complete depth-" + std::to_string(q) + " block");
        }
        auto sub = holders[m + j].preorder();
        nodes.insert(nodes.end(), sub.begin(), sub.end());
      }
      auto first = static_cast<std::ptrdiff_t>(m);
      words.erase(words.begin() + first + 1, words.begin() + first + big);
      holders.erase(holders.begin() + first + 1, holders.begin() + first + big);
      words[m]   = Word(2, std::move(prefix));
      holders[m] = NaryTree::from_preorder(big, std::move(nodes));
    }
    if (!words.front().empty()) {
      throw NotInSubgroup("tree does not decompose into depth-" + std::to_string(q) + " blocks");
    }
    return holders.front();
  }

}  // namespace

TreeDiagram phi_q(TreeDiagram const& d, unsigned q) {
  check_block_size(q);
  if (d.arity() != (1u << q)) {
    throw ArityMismatch("phi_q: element has arity " + std::to_string(d.arity()) + ", expected "
                        + std::to_string(1u << q));
  }
  return TreeDiagram(phi_tree(d.domain(), q), phi_tree(d.range(), q));
}

TreeDiagram unphi_q(TreeDiagram const& d, unsigned q) {
  check_block_size(q);
  if (d.arity() != 2) {
    throw ArityMismatch("unphi_q expects a binary diagram");
  }
  TreeDiagram normal = normalize_lengths(d, q);
  return reduce(TreeDiagram(peel_blocks(normal.domain(), q), peel_blocks(normal.range(), q)));
}

}  // namespace thomp
