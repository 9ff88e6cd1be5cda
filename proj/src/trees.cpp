#include "thomp/trees.hpp"

#include <algorithm>
#include <utility>

#include "thomp/error.hpp"

namespace thomp {

namespace {

  char digit_char(unsigned d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
  }

  void check_arity(unsigned arity) {
    if (arity < 2 || arity > kMaxArity) {
      throw ArityMismatch("arity must lie in [2, 256], got " + std::to_string(arity));
    }
  }

  // a*b mod m without overflow for 64-bit m.
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  }

  std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e > 0) {
      if (e & 1) {
        r = mulmod(r, base, m);
      }
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  }

  void check_odd_modulus(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) {
      throw InvalidModulus("modulus must be odd and at least 3, got " + std::to_string(p));
    }
  }

  // Index one past the subtree rooted at position pos.
  std::size_t subtree_end(std::span<std::uint8_t const> nodes, std::size_t pos, unsigned arity) {
    std::size_t pending = 1;
    while (pending > 0) {
      if (nodes[pos++]) {
        pending += arity - 1;
      } else {
        --pending;
      }
    }
    return pos;
  }

}  // namespace

////////////////////////////////////////////////////////////////////////
// Word
////////////////////////////////////////////////////////////////////////

Word::Word(unsigned arity, std::vector<std::uint8_t> letters)
    : arity_(arity), letters_(std::move(letters)) {
  check_arity(arity);
  for (auto a : letters_) {
    if (a >= arity_) {
      throw IndexOutOfRange("letter " + std::to_string(a) + " not below arity "
                            + std::to_string(arity_));
    }
  }
}

Word Word::parse(std::string_view digits, unsigned arity) {
  std::vector<std::uint8_t> letters;
  letters.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    unsigned d;
    if (c >= '0' && c <= '9') {
      d = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'z') {
      d = static_cast<unsigned>(c - 'a') + 10;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in word", i);
    }
    if (d >= arity) {
      throw ParseError("letter exceeds arity", i);
    }
    letters.push_back(static_cast<std::uint8_t>(d));
  }
  return Word(arity, std::move(letters));
}

Word Word::zeros(std::size_t count, unsigned arity) {
  return Word(arity, std::vector<std::uint8_t>(count, 0));
}

void Word::push_back(unsigned letter) {
  if (letter >= arity_) {
    throw IndexOutOfRange("letter not below arity");
  }
  letters_.push_back(static_cast<std::uint8_t>(letter));
}

Word Word::concat(Word const& other) const {
  if (other.arity_ != arity_) {
    throw ArityMismatch("cannot concatenate words of different arity");
  }
  Word out = *this;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

Word Word::suffix(std::size_t count) const {
  Word out(arity_);
  if (count < letters_.size()) {
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(count), letters_.end());
  }
  return out;
}

bool Word::is_prefix_of(Word const& other) const noexcept {
  return letters_.size() <= other.letters_.size()
         && std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

bool Word::all_zero() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](auto a) { return a == 0; });
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto a : letters_) {
    s.push_back(digit_char(a));
  }
  return s;
}

////////////////////////////////////////////////////////////////////////
// Dyadic
////////////////////////////////////////////////////////////////////////

Dyadic::Dyadic(BigInt numerator, unsigned exponent) : num_(std::move(numerator)), exp_(exponent) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  // Strip common powers of two.
  unsigned tz = static_cast<unsigned>(boost::multiprecision::lsb(abs(num_)));
  unsigned shift = std::min(tz, exp_);
  if (shift > 0) {
    num_ >>= shift;  // exact: the low bits are zero (also for negatives)
    exp_ -= shift;
  }
}

Dyadic Dyadic::parse(std::string_view text) {
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s, std::size_t offset) {
    if (s.empty()) {
      throw ParseError("empty integer in dyadic", offset);
    }
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-') {
      neg = true;
      i = 1;
    }
    if (i == s.size()) {
      throw ParseError("empty integer in dyadic", offset);
    }
    BigInt v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw ParseError("non-digit in dyadic", offset + i);
      }
      v = v * 10 + (s[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  if (slash == std::string_view::npos) {
    return Dyadic(parse_int(text, 0), 0);
  }
  BigInt num = parse_int(text.substr(0, slash), 0);
  BigInt den = parse_int(text.substr(slash + 1), slash + 1);
  if (den <= 0 || (den & (den - 1)) != 0) {
    throw ParseError("denominator is not a power of two", slash + 1);
  }
  return Dyadic(num, static_cast<unsigned>(boost::multiprecision::msb(den)));
}

Dyadic Dyadic::scaled(int k) const {
  if (k >= 0) {
    auto uk = static_cast<unsigned>(k);
    if (uk <= exp_) {
      return Dyadic(num_, exp_ - uk);
    }
    return Dyadic(BigInt(num_ << (uk - exp_)), 0);
  }
  return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
}

std::uint64_t Dyadic::mod(std::uint64_t p) const {
  check_odd_modulus(p);
  BigInt r = num_ % p;
  if (r < 0) {
    r += p;
  }
  auto n = static_cast<std::uint64_t>(r);
  std::uint64_t inv2 = (p + 1) / 2;
  return mulmod(n, powmod(inv2, exp_, p), p);
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) {
    return num_.str();
  }
  BigInt den = BigInt(1) << exp_;
  return num_.str() + "/" + den.str();
}

Dyadic operator+(Dyadic const& a, Dyadic const& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  BigInt na = a.num_ << (e - a.exp_);
  BigInt nb = b.num_ << (e - b.exp_);
  return Dyadic(na + nb, e);
}

Dyadic operator-(Dyadic const& a, Dyadic const& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  BigInt na = a.num_ << (e - a.exp_);
  BigInt nb = b.num_ << (e - b.exp_);
  return Dyadic(na - nb, e);
}

Dyadic operator*(Dyadic const& a, Dyadic const& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

bool operator==(Dyadic const& a, Dyadic const& b) {
  return a.exp_ == b.exp_ && a.num_ == b.num_;
}

std::strong_ordering operator<=>(Dyadic const& a, Dyadic const& b) {
  unsigned e = std::max(a.exp_, b.exp_);
  BigInt na = a.num_ << (e - a.exp_);
  BigInt nb = b.num_ << (e - b.exp_);
  if (na < nb) {
    return std::strong_ordering::less;
  }
  if (nb < na) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

////////////////////////////////////////////////////////////////////////
// NaryTree
////////////////////////////////////////////////////////////////////////

NaryTree::NaryTree(unsigned arity) : arity_(arity), nodes_{0}, carets_(0) {
  check_arity(arity);
}

NaryTree::NaryTree(unsigned arity, std::vector<std::uint8_t> nodes, std::size_t carets)
    : arity_(arity), nodes_(std::move(nodes)), carets_(carets) {}

NaryTree NaryTree::caret(unsigned arity) {
  check_arity(arity);
  std::vector<std::uint8_t> nodes(arity + 1, 0);
  nodes[0] = 1;
  return NaryTree(arity, std::move(nodes), 1);
}

NaryTree NaryTree::from_preorder(unsigned arity, std::vector<std::uint8_t> nodes) {
  check_arity(arity);
  std::size_t pending = 1;
  std::size_t carets  = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (pending == 0) {
      throw InvalidPartition("preorder sequence has trailing nodes");
    }
    if (nodes[i] > 1) {
      throw InvalidPartition("preorder entries must be 0 or 1");
    }
    if (nodes[i]) {
      ++carets;
      pending += arity - 1;
    } else {
      --pending;
    }
  }
  if (pending != 0) {
    throw InvalidPartition("preorder sequence is incomplete");
  }
  return NaryTree(arity, std::move(nodes), carets);
}

NaryTree NaryTree::parse(std::string_view expr, unsigned default_arity) {
  std::vector<std::uint8_t> nodes;
  std::vector<unsigned> children;  // children seen so far, per open node
  unsigned arity = 0;
  std::size_t carets = 0;
  bool done = false;
  for (std::size_t i = 0; i < expr.size(); ++i) {
    char c = expr[i];
    if (done) {
      throw ParseError("trailing characters after tree", i);
    }
    if (c == '.') {
      nodes.push_back(0);
      if (children.empty()) {
        done = true;
      } else {
        ++children.back();
      }
    } else if (c == '(') {
      nodes.push_back(1);
      ++carets;
      children.push_back(0);
    } else if (c == ')') {
      if (children.empty()) {
        throw ParseError("unbalanced ')'", i);
      }
      unsigned k = children.back();
      if (arity == 0) {
        if (k < 2 || k > kMaxArity) {
          throw ParseError("caret must have between 2 and 256 children", i);
        }
        arity = k;
      } else if (k != arity) {
        throw ParseError("caret has " + std::to_string(k) + " children, expected "
                             + std::to_string(arity),
                         i);
      }
      children.pop_back();
      if (children.empty()) {
        done = true;
      } else {
        ++children.back();
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (!done) {
    throw ParseError("incomplete tree expression", expr.size());
  }
  if (arity == 0) {
    arity = default_arity;
  }
  check_arity(arity);
  return NaryTree(arity, std::move(nodes), carets);
}

std::string NaryTree::to_string() const {
  std::string s;
  s.reserve(nodes_.size() + carets_);
  std::vector<unsigned> remaining;
  for (auto node : nodes_) {
    if (node) {
      s.push_back('(');
      remaining.push_back(arity_);
      continue;
    }
    s.push_back('.');
    while (!remaining.empty() && --remaining.back() == 0) {
      s.push_back(')');
      remaining.pop_back();
    }
  }
  return s;
}

////////////////////////////////////////////////////////////////////////
// Free functions
////////////////////////////////////////////////////////////////////////

std::vector<Word> leaf_words(NaryTree const& t) {
  std::vector<Word> out;
  out.reserve(t.leaf_count());
  std::vector<std::uint8_t> cur;
  for (auto node : t.preorder()) {
    if (node) {
      cur.push_back(0);
      continue;
    }
    out.emplace_back(t.arity(), cur);
    while (!cur.empty()) {
      if (++cur.back() < t.arity()) {
        break;
      }
      cur.pop_back();
    }
  }
  return out;
}

std::vector<std::size_t> leaf_depths(NaryTree const& t) {
  std::vector<std::size_t> out;
  out.reserve(t.leaf_count());
  std::vector<unsigned> cur;
  for (auto node : t.preorder()) {
    if (node) {
      cur.push_back(0);
      continue;
    }
    out.push_back(cur.size());
    while (!cur.empty()) {
      if (++cur.back() < t.arity()) {
        break;
      }
      cur.pop_back();
    }
  }
  return out;
}

Dyadic rho(Word const& w) {
  if (w.arity() != 2) {
    throw ArityMismatch("rho is defined on binary words");
  }
  BigInt num = 0;
  for (auto a : w.letters()) {
    num <<= 1;
    num |= a;
  }
  return Dyadic(num, static_cast<unsigned>(w.length()));
}

std::uint64_t rho_mod(Word const& w, std::uint64_t p) {
  check_odd_modulus(p);
  if (w.arity() != 2) {
    throw ArityMismatch("rho is defined on binary words");
  }
  std::uint64_t const inv2 = (p + 1) / 2;
  std::uint64_t weight = 1;
  std::uint64_t sum = 0;
  for (auto a : w.letters()) {
    weight = mulmod(weight, inv2, p);
    if (a) {
      sum = (sum + weight) % p;
    }
  }
  return sum;
}

NaryTree complete_tree(unsigned depth, unsigned arity) {
  check_arity(arity);
  std::vector<std::uint8_t> nodes;
  std::size_t carets = 0;
  // Preorder of a complete tree: a caret at every depth below `depth`.
  std::vector<unsigned> stack{0};  // depth of pending nodes
  while (!stack.empty()) {
    unsigned d = stack.back();
    stack.pop_back();
    if (d < depth) {
      nodes.push_back(1);
      ++carets;
      for (unsigned i = 0; i < arity; ++i) {
        stack.push_back(d + 1);
      }
    } else {
      nodes.push_back(0);
    }
  }
  return NaryTree::from_preorder(arity, std::move(nodes));
}

NaryTree attach(NaryTree const& t, std::size_t leaf_index, NaryTree const& sub) {
  if (t.arity() != sub.arity()) {
    throw ArityMismatch("attach: arity mismatch");
  }
  if (leaf_index >= t.leaf_count()) {
    throw IndexOutOfRange("attach: leaf index " + std::to_string(leaf_index)
                          + " out of range for " + std::to_string(t.leaf_count()) + " leaves");
  }
  auto nodes = t.preorder();
  std::vector<std::uint8_t> out;
  out.reserve(nodes.size() + sub.preorder().size());
  std::size_t seen = 0;
  for (auto node : nodes) {
    if (!node && seen++ == leaf_index) {
      out.insert(out.end(), sub.preorder().begin(), sub.preorder().end());
    } else {
      out.push_back(node);
    }
  }
  return NaryTree::from_preorder(t.arity(), std::move(out));
}

NaryTree substitute_leaves(NaryTree const& t, std::span<NaryTree const> subs) {
  if (subs.size() != t.leaf_count()) {
    throw IndexOutOfRange("substitute_leaves: need one subtree per leaf");
  }
  std::vector<std::uint8_t> out;
  std::size_t seen = 0;
  for (auto node : t.preorder()) {
    if (node) {
      out.push_back(1);
      continue;
    }
    auto const& sub = subs[seen++];
    if (sub.arity() != t.arity()) {
      throw ArityMismatch("substitute_leaves: arity mismatch");
    }
    out.insert(out.end(), sub.preorder().begin(), sub.preorder().end());
  }
  return NaryTree::from_preorder(t.arity(), std::move(out));
}

bool refines(NaryTree const& fine, NaryTree const& coarse) {
  if (fine.arity() != coarse.arity()) {
    return false;
  }
  auto f = fine.preorder();
  auto c = coarse.preorder();
  std::size_t i = 0;
  for (auto node : c) {
    if (node) {
      if (!f[i]) {
        return false;
      }
      ++i;
    } else {
      i = subtree_end(f, i, fine.arity());
    }
  }
  return true;
}

namespace {

  struct RefineState {
    std::span<std::uint8_t const> a;
    std::span<std::uint8_t const> b;
    unsigned arity;
    std::vector<std::uint8_t> out;
    std::vector<NaryTree> parts_a;
    std::vector<NaryTree> parts_b;
  };

  NaryTree slice_tree(std::span<std::uint8_t const> nodes, std::size_t from, std::size_t to,
                      unsigned arity) {
    return NaryTree::from_preorder(
        arity, std::vector<std::uint8_t>(nodes.begin() + static_cast<std::ptrdiff_t>(from),
                                         nodes.begin() + static_cast<std::ptrdiff_t>(to)));
  }

  // Walks both preorders in lockstep; returns the end positions.
  std::pair<std::size_t, std::size_t> refine_rec(RefineState& s, std::size_t i, std::size_t j) {
    bool ca = s.a[i] != 0;
    bool cb = s.b[j] != 0;
    if (ca && cb) {
      s.out.push_back(1);
      ++i;
      ++j;
      for (unsigned c = 0; c < s.arity; ++c) {
        std::tie(i, j) = refine_rec(s, i, j);
      }
      return {i, j};
    }
    if (!ca && !cb) {
      s.out.push_back(0);
      s.parts_a.emplace_back(s.arity);
      s.parts_b.emplace_back(s.arity);
      return {i + 1, j + 1};
    }
    if (!ca) {
      std::size_t end = subtree_end(s.b, j, s.arity);
      s.out.insert(s.out.end(), s.b.begin() + static_cast<std::ptrdiff_t>(j),
                   s.b.begin() + static_cast<std::ptrdiff_t>(end));
      s.parts_a.push_back(slice_tree(s.b, j, end, s.arity));
      for (std::size_t k = j; k < end; ++k) {
        if (!s.b[k]) {
          s.parts_b.emplace_back(s.arity);
        }
      }
      return {i + 1, end};
    }
    std::size_t end = subtree_end(s.a, i, s.arity);
    s.out.insert(s.out.end(), s.a.begin() + static_cast<std::ptrdiff_t>(i),
                 s.a.begin() + static_cast<std::ptrdiff_t>(end));
    s.parts_b.push_back(slice_tree(s.a, i, end, s.arity));
    for (std::size_t k = i; k < end; ++k) {
      if (!s.a[k]) {
        s.parts_a.emplace_back(s.arity);
      }
    }
    return {end, j + 1};
  }

}  // namespace

Refinement refine(NaryTree const& t1, NaryTree const& t2) {
  if (t1.arity() != t2.arity()) {
    throw ArityMismatch("common_refinement: arity mismatch");
  }
  RefineState s{t1.preorder(), t2.preorder(), t1.arity(), {}, {}, {}};
  refine_rec(s, 0, 0);
  return Refinement{NaryTree::from_preorder(t1.arity(), std::move(s.out)),
                    std::move(s.parts_a), std::move(s.parts_b)};
}

NaryTree common_refinement(NaryTree const& t1, NaryTree const& t2) {
  return refine(t1, t2).tree;
}

namespace {

  void build_from_words(std::span<Word const> words, std::size_t depth, unsigned arity,
                        std::vector<std::uint8_t>& out) {
    if (words.empty()) {
      throw InvalidPartition("leaf words leave a gap below depth " + std::to_string(depth));
    }
    if (words.size() == 1 && words[0].length() == depth) {
      out.push_back(0);
      return;
    }
    out.push_back(1);
    std::size_t start = 0;
    for (unsigned letter = 0; letter < arity; ++letter) {
      std::size_t end = start;
      while (end < words.size()) {
        if (words[end].length() <= depth) {
          throw InvalidPartition("leaf word " + words[end].to_string()
                                 + " is a prefix of another leaf word");
        }
        if (words[end][depth] != letter) {
          break;
        }
        ++end;
      }
      build_from_words(words.subspan(start, end - start), depth + 1, arity, out);
      start = end;
    }
    if (start != words.size()) {
      throw InvalidPartition("leaf words are not sorted");
    }
  }

}  // namespace

NaryTree tree_from_leaf_words(std::span<Word const> words, unsigned arity) {
  for (auto const& w : words) {
    if (w.arity() != arity) {
      throw ArityMismatch("tree_from_leaf_words: word arity mismatch");
    }
  }
  std::vector<std::uint8_t> out;
  build_from_words(words, 0, arity, out);
  return NaryTree::from_preorder(arity, std::move(out));
}

NaryTree tree_from_breakpoints(std::span<Dyadic const> b) {
  if (b.size() < 2 || b.front() != Dyadic(0) || b.back() != Dyadic(1)) {
    throw InvalidPartition("breakpoints must run from 0 to 1");
  }
  std::vector<Word> words;
  words.reserve(b.size() - 1);
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    if (!(b[i] < b[i + 1])) {
      throw InvalidPartition("breakpoints must be strictly increasing");
    }
    Dyadic len = b[i + 1] - b[i];
    if (len.numerator() != 1) {
      throw InvalidPartition("interval [" + b[i].to_string() + ", " + b[i + 1].to_string()
                             + "] does not have length 2^-k");
    }
    unsigned k = len.exponent();
    if (b[i].exponent() > k) {
      throw InvalidPartition("interval starting at " + b[i].to_string()
                             + " is not aligned to its length");
    }
    BigInt bits = b[i].numerator() << (k - b[i].exponent());
    std::vector<std::uint8_t> letters(k, 0);
    for (unsigned d = 0; d < k; ++d) {
      letters[k - 1 - d] = boost::multiprecision::bit_test(bits, d) ? 1 : 0;
    }
    words.emplace_back(2, std::move(letters));
  }
  return tree_from_leaf_words(words, 2);
}

std::vector<std::size_t> exposed_carets(NaryTree const& t) {
  std::vector<std::size_t> out;
  auto nodes = t.preorder();
  std::size_t leaves = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i]) {
      ++leaves;
      continue;
    }
    if (i + t.arity() < nodes.size()
        && std::all_of(nodes.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                       nodes.begin() + static_cast<std::ptrdiff_t>(i + t.arity()) + 1,
                       [](auto n) { return n == 0; })) {
      out.push_back(leaves);
    }
  }
  return out;
}

NaryTree contract(NaryTree const& t, std::size_t leaf_index) {
  auto nodes = t.preorder();
  std::size_t leaves = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i]) {
      if (leaves++ > leaf_index) {
        break;
      }
      continue;
    }
    if (leaves != leaf_index) {
      continue;
    }
    bool exposed = i + t.arity() < nodes.size();
    for (std::size_t k = 1; exposed && k <= t.arity(); ++k) {
      exposed = nodes[i + k] == 0;
    }
    if (exposed) {
      std::vector<std::uint8_t> out(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(0);
      out.insert(out.end(), nodes.begin() + static_cast<std::ptrdiff_t>(i + t.arity()) + 1,
                 nodes.end());
      return NaryTree::from_preorder(t.arity(), std::move(out));
    }
  }
  throw IndexOutOfRange("contract: no exposed caret at leaf " + std::to_string(leaf_index));
}

}  // namespace thomp
