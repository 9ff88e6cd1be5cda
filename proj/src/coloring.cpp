#include "thomp/coloring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "thomp/error.hpp"
#include "thomp/fp.hpp"

namespace thomp {

// ---------------------------------------------------------------------------
// Integer matrices

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (auto const& r : rows) {
    if (r.size() != cols_) {
      throw PreconditionViolation("ragged matrix literal");
    }
    for (long v : r) {
      a_.emplace_back(v);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::operator*(IntMatrix const& o) const {
  if (cols_ != o.rows_) {
    throw PreconditionViolation("matrix shapes do not match");
  }
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      auto const& a = (*this)(i, k);
      if (a == 0) {
        continue;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) {
        out(i, j) += a * o(k, j);
      }
    }
  }
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && (*this)(i, j) != 0) {
        return false;
      }
    }
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      out << (j ? "," : "") << (*this)(i, j);
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
    d.push_back(D(i, i));
  }
  return d;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::swap(m(a, j), m(b, j));
  }
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::swap(m(i, a), m(i, b));
  }
}

// row dst += f * row src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, BigInt const& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(src, j) != 0) {
      m(dst, j) += f * m(src, j);
    }
  }
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, BigInt const& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, src) != 0) {
      m(i, dst) += f * m(i, src);
    }
  }
}

}  // namespace

SmithForm smith_normal_form(IntMatrix const& input) {
  std::size_t const r = input.rows();
  std::size_t const c = input.cols();
  IntMatrix A = input;
  IntMatrix U = IntMatrix::identity(r);
  IntMatrix V = IntMatrix::identity(c);

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = r, pj = c;
      BigInt best;
      for (std::size_t i = t; i < r; ++i) {
        for (std::size_t j = t; j < c; ++j) {
          if (A(i, j) != 0 && (pi == r || abs(A(i, j)) < best)) {
            best = abs(A(i, j));
            pi   = i;
            pj   = j;
          }
        }
      }
      if (pi == r) {
        return {std::move(U), std::move(A), std::move(V)};
      }
      swap_rows(A, t, pi);
      swap_rows(U, t, pi);
      swap_cols(A, t, pj);
      swap_cols(V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (A(i, t) != 0) {
          BigInt q = A(i, t) / A(t, t);
          add_row(A, i, t, -q);
          add_row(U, i, t, -q);
          clean = clean && A(i, t) == 0;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (A(t, j) != 0) {
          BigInt q = A(t, j) / A(t, t);
          add_col(A, j, t, -q);
          add_col(V, j, t, -q);
          clean = clean && A(t, j) == 0;
        }
      }
      if (!clean) {
        continue;
      }
      // Enforce d_t | every later entry by folding an offending row in.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == r) {
        break;
      }
      add_row(A, t, bad, 1);
      add_row(U, t, bad, 1);
    }
    if (A(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) {
        A(t, j) = -A(t, j);
      }
      for (std::size_t j = 0; j < r; ++j) {
        U(t, j) = -U(t, j);
      }
    }
  }
  return {std::move(U), std::move(A), std::move(V)};
}

BigInt kernel_size_mod(IntMatrix const& m, std::uint64_t modulus) {
  if (modulus < 2) {
    throw InvalidModulus("modulus must be at least 2");
  }
  auto snf     = smith_normal_form(m);
  BigInt count = 1;
  BigInt mod   = modulus;
  auto diag    = snf.diagonal();
  for (auto const& d : diag) {
    count *= d == 0 ? mod : BigInt(gcd(d, mod));
  }
  for (std::size_t j = diag.size(); j < m.cols(); ++j) {
    count *= mod;
  }
  return count;
}

BigInt bareiss_determinant(IntMatrix m) {
  std::size_t const n = m.rows();
  if (n != m.cols()) {
    throw PreconditionViolation("determinant of a non-square matrix");
  }
  if (n == 0) {
    return 1;
  }
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) {
        ++swap;
      }
      if (swap == n) {
        return 0;
      }
      swap_rows(m, k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Diagonalization over Z/m

namespace {

using u64  = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 addmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) + b) % m); }
u64 negmod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

// s*a + t*b = g over the integers, s and t reduced mod m.
struct Bezout {
  u64 g, s, t;
};

Bezout bezout(u64 a, u64 b, u64 m) {
  __int128 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  auto red = [m](__int128 x) { return static_cast<u64>(((x % m) + m) % m); };
  return {static_cast<u64>(r0), red(s0), red(t0)};
}

u64 inverse_mod(u64 a, u64 m) {
  auto b = bezout(a, m, m);
  return b.g == 1 ? b.s : 0;
}

struct ModKernel {
  std::vector<u64> diag;              // length min(rows, cols)
  std::vector<std::vector<u64>> v;    // columns of V
};

// A -> A V with row operations applied on the left (not tracked) so that
// the result is diagonal; solutions of A x = 0 are x = V y with D y = 0.
ModKernel diagonalize_mod(std::vector<std::vector<u64>> a, std::size_t cols, u64 m) {
  std::size_t const rows = a.size();
  ModKernel out;
  out.v.assign(cols, std::vector<u64>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    out.v[j][j] = 1 % m;
  }
  std::size_t const n = std::min(rows, cols);
  out.diag.assign(n, 0);

  auto combine_rows = [&](std::size_t t, std::size_t i) {
    u64 x = a[t][t], y = a[i][t];
    u64 ux = inverse_mod(x, m);
    if (ux != 0 || y % x == 0) {
      u64 f = ux != 0 ? mulmod(y, ux, m) : y / x;
      for (std::size_t j = t; j < cols; ++j) {
        if (a[t][j] != 0) {
          a[i][j] = addmod(a[i][j], negmod(mulmod(f, a[t][j], m), m), m);
        }
      }
      return;
    }
    // Otherwise gcd(x, y) < x, so the pivot strictly decreases.
    auto [g, s, u] = bezout(x, y, m);
    u64 xg = x / g, yg = y / g;
    for (std::size_t j = t; j < cols; ++j) {
      u64 rt = a[t][j], ri = a[i][j];
      a[t][j] = addmod(mulmod(s, rt, m), mulmod(u, ri, m), m);
      a[i][j] = addmod(negmod(mulmod(yg, rt, m), m), mulmod(xg, ri, m), m);
    }
  };
  auto combine_cols = [&](std::size_t t, std::size_t j) {
    u64 x = a[t][t], y = a[t][j];
    u64 ux = inverse_mod(x, m);
    if (ux != 0 || y % x == 0) {
      u64 f = negmod(ux != 0 ? mulmod(y, ux, m) : y / x, m);
      for (std::size_t i = t; i < rows; ++i) {
        if (a[i][t] != 0) {
          a[i][j] = addmod(a[i][j], mulmod(f, a[i][t], m), m);
        }
      }
      auto const& vt = out.v[t];
      auto& vj       = out.v[j];
      for (std::size_t k = 0; k < cols; ++k) {
        if (vt[k] != 0) {
          vj[k] = addmod(vj[k], mulmod(f, vt[k], m), m);
        }
      }
      return;
    }
    auto [g, s, u] = bezout(x, y, m);
    u64 xg = x / g, yg = y / g;
    for (std::size_t i = t; i < rows; ++i) {
      u64 ct = a[i][t], cj = a[i][j];
      a[i][t] = addmod(mulmod(s, ct, m), mulmod(u, cj, m), m);
      a[i][j] = addmod(negmod(mulmod(yg, ct, m), m), mulmod(xg, cj, m), m);
    }
    for (std::size_t k = 0; k < cols; ++k) {
      u64 ct = out.v[t][k], cj = out.v[j][k];
      out.v[t][k] = addmod(mulmod(s, ct, m), mulmod(u, cj, m), m);
      out.v[j][k] = addmod(negmod(mulmod(yg, ct, m), m), mulmod(xg, cj, m), m);
    }
  };

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = rows, pj = cols;
    u64 best = 0;
    for (std::size_t i = t; i < rows && best != 1; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) {
          continue;
        }
        u64 g = std::gcd(a[i][j], m);
        if (pi == rows || g < best) {
          best = g;
          pi   = i;
          pj   = j;
          if (g == 1) {
            break;
          }
        }
      }
    }
    if (pi == rows) {
      break;
    }
    std::swap(a[t], a[pi]);
    if (pj != t) {
      for (auto& row : a) {
        std::swap(row[t], row[pj]);
      }
      std::swap(out.v[t], out.v[pj]);
    }
    while (true) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] != 0) {
          combine_rows(t, i);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] != 0) {
          combine_cols(t, j);
        }
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows && clean; ++i) {
        clean = a[i][t] == 0;
      }
      if (clean) {
        break;
      }
    }
    out.diag[t] = a[t][t];
  }
  return out;
}

u64 residue(BigInt const& x, u64 m) {
  BigInt r = x % m;
  if (r < 0) {
    r += m;
  }
  return static_cast<u64>(r);
}

}  // namespace

// ---------------------------------------------------------------------------
// Colorings

ColoringSystem::ColoringSystem(LinkDiagram const& l) : matrix(l.crossing_count() + 1, l.face_count()) {
  for (std::size_t c = 0; c < l.crossing_count(); ++c) {
    std::size_t s = l.under_slot(c);
    matrix(c, l.corner_face(4 * c + s)) += 1;
    matrix(c, l.corner_face(4 * c + (s + 1) % 4)) += 1;
    matrix(c, l.corner_face(4 * c + (s + 2) % 4)) -= 1;
    matrix(c, l.corner_face(4 * c + (s + 3) % 4)) -= 1;
  }
  matrix(l.crossing_count(), l.unbounded_face()) = 1;
}

std::size_t Checkerboard::white_count() const {
  return static_cast<std::size_t>(std::count(black.begin(), black.end(), 0));
}

Checkerboard checkerboard(LinkDiagram const& l) {
  std::size_t const f = l.face_count();
  std::vector<std::vector<std::size_t>> adj(f);
  for (std::size_t d = 0; d < l.dart_count(); ++d) {
    auto [x, y] = l.edge_faces(d);
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (std::size_t j = 0; j < l.free_loops(); ++j) {
    adj[l.unbounded_face()].push_back(l.loop_face(j));
    adj[l.loop_face(j)].push_back(l.unbounded_face());
  }
  std::vector<int> color(f, -1);
  std::deque<std::size_t> queue{l.unbounded_face()};
  color[l.unbounded_face()] = 0;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto y : adj[x]) {
      if (color[y] < 0) {
        color[y] = 1 - color[x];
        queue.push_back(y);
      } else if (color[y] == color[x]) {
        throw PreconditionViolation("face adjacency graph is not bipartite");
      }
    }
  }
  Checkerboard cb;
  for (auto c : color) {
    if (c < 0) {
      throw PreconditionViolation("face adjacency graph is disconnected");
    }
    cb.black.push_back(static_cast<std::uint8_t>(c));
  }
  return cb;
}

bool is_dehn_coloring(LinkDiagram const& l, DehnColoring const& c) {
  if (c.p < 2 || c.faces.size() != l.face_count()) {
    return false;
  }
  for (auto v : c.faces) {
    if (v >= c.p) {
      return false;
    }
  }
  if (c.faces[l.unbounded_face()] != 0) {
    return false;
  }
  for (std::size_t x = 0; x < l.crossing_count(); ++x) {
    std::size_t s = l.under_slot(x);
    auto face     = [&](std::size_t k) { return c.faces[l.corner_face(4 * x + (s + k) % 4)]; };
    if (addmod(face(0), face(1), c.p) != addmod(face(2), face(3), c.p)) {
      return false;
    }
  }
  return true;
}

bool is_trivial(DehnColoring const& c, Checkerboard const& cb) {
  if (c.faces.size() != cb.black.size()) {
    throw PreconditionViolation("coloring and checkerboard belong to different diagrams");
  }
  std::optional<std::uint64_t> black_value;
  for (std::size_t f = 0; f < c.faces.size(); ++f) {
    if (!cb.black[f]) {
      if (c.faces[f] != 0) {
        return false;
      }
    } else if (!black_value) {
      black_value = c.faces[f];
    } else if (*black_value != c.faces[f]) {
      return false;
    }
  }
  return true;
}

DehnColorings dehn_colorings(LinkDiagram const& l, std::uint64_t p) {
  if (p < 2) {
    throw InvalidModulus("Dehn colorings need p >= 2");
  }
  ColoringSystem sys(l);
  std::size_t const cols = sys.matrix.cols();
  std::vector<std::vector<u64>> rows(sys.matrix.rows(), std::vector<u64>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      rows[i][j] = residue(sys.matrix(i, j), p);
    }
  }
  auto ker = diagonalize_mod(std::move(rows), cols, p);

  DehnColorings out{1, std::nullopt};
  auto cb = checkerboard(l);
  for (std::size_t j = 0; j < cols; ++j) {
    // gcd(0, p) = p covers zero pivots and columns past the diagonal.
    u64 g = j < ker.diag.size() ? std::gcd(ker.diag[j], p) : p;
    out.count *= g;
    if (g == 1 || out.nontrivial) {
      continue;
    }
    DehnColoring c{p, std::vector<u64>(cols)};
    for (std::size_t k = 0; k < cols; ++k) {
      c.faces[k] = mulmod(ker.v[j][k], p / g, p);
    }
    if (!is_trivial(c, cb)) {
      out.nontrivial = std::move(c);
    }
  }
  return out;
}

DehnColoring strip_rule_coloring(TreeDiagram const& d, std::uint64_t p) {
  auto m      = jones_graph(d);
  auto leaves = leaf_words(d.domain());
  DehnColoring c{p, std::vector<u64>(m.face_count(), 0)};
  c.faces[m.outer_face]     = 0;
  c.faces[m.unbounded_face] = 1 % p;
  for (std::size_t gap = 0; gap < m.gap_left_face.size(); ++gap) {
    u64 alpha                      = rho_mod(leaves[gap + 1], p);
    c.faces[m.gap_left_face[gap]]  = alpha;
    c.faces[m.gap_right_face[gap]] = negmod(alpha, p);
  }
  for (auto& v : c.faces) {
    v = addmod(v, p - 1 % p, p);
  }
  return c;
}

DehnColoring coloring_from_strip(TreeDiagram const& d, std::uint64_t p) {
  if (!is_member(d, p)) {
    throw NotInSubgroup(d.to_string() + " is not in F_" + std::to_string(p));
  }
  auto r = reduce(d);
  if (r.caret_count() == 0) {
    throw TrivialElement("the identity yields the unknot, which has only trivial colorings");
  }
  auto l = jones_link(r);
  auto c = strip_rule_coloring(r, p);
  if (is_dehn_coloring(l, c) && !is_trivial(c, checkerboard(l))) {
    return c;
  }
  auto all = dehn_colorings(l, p);
  if (!all.nontrivial) {
    throw Error("no nontrivial Dehn " + std::to_string(p) + "-coloring of L(" + r.to_string()
                + ")");
  }
  return *all.nontrivial;
}

namespace {

struct FoxSearch {
  u64 p;
  std::vector<std::vector<std::pair<std::size_t, u64>>> constraints;
  std::size_t arcs;

  BigInt count(std::vector<long> val) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto const& con : constraints) {
        u64 sum             = 0;
        std::size_t unknown = 0;
        std::size_t var     = 0;
        u64 coef            = 0;
        for (auto [a, k] : con) {
          if (val[a] < 0) {
            ++unknown;
            var  = a;
            coef = k;
          } else {
            sum = addmod(sum, mulmod(k, static_cast<u64>(val[a]), p), p);
          }
        }
        if (unknown == 0 && sum != 0) {
          return 0;
        }
        if (unknown == 1) {
          u64 inv = inverse_mod(coef, p);
          if (inv != 0) {
            val[var] = static_cast<long>(mulmod(negmod(sum, p), inv, p));
            changed  = true;
          }
        }
      }
    }
    auto it = std::find(val.begin(), val.end(), -1);
    if (it == val.end()) {
      return 1;
    }
    BigInt total = 0;
    for (u64 v = 0; v < p; ++v) {
      *it = static_cast<long>(v);
      total += count(val);
    }
    return total;
  }
};

}  // namespace

BigInt fox_colorings_bruteforce(LinkDiagram const& l, std::uint64_t p, std::size_t max_crossings) {
  if (p < 2) {
    throw InvalidModulus("Fox colorings need p >= 2");
  }
  if (l.crossing_count() > max_crossings) {
    throw SizeLimitExceeded("brute-force Fox count limited to " + std::to_string(max_crossings)
                            + " crossings, diagram has " + std::to_string(l.crossing_count()));
  }
  std::size_t const n = l.dart_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  for (std::size_t d = 0; d < n; ++d) {
    parent[find(d)] = find(l.twin(d));
  }
  for (std::size_t c = 0; c < l.crossing_count(); ++c) {
    std::size_t s = l.under_slot(c);
    parent[find(4 * c + s + 1)] = find(4 * c + (s + 3) % 4);
  }
  std::vector<std::size_t> arc(n, kNone);
  std::size_t arcs = 0;
  std::vector<std::size_t> root_id(n, kNone);
  for (std::size_t d = 0; d < n; ++d) {
    auto r = find(d);
    if (root_id[r] == kNone) {
      root_id[r] = arcs++;
    }
    arc[d] = root_id[r];
  }

  FoxSearch search{p, {}, arcs};
  for (std::size_t c = 0; c < l.crossing_count(); ++c) {
    std::size_t s = l.under_slot(c);
    std::vector<std::pair<std::size_t, u64>> terms;
    auto add = [&](std::size_t a, u64 k) {
      for (auto& [b, kb] : terms) {
        if (b == a) {
          kb = addmod(kb, k, p);
          return;
        }
      }
      terms.emplace_back(a, k);
    };
    add(arc[4 * c + s + 1], 2 % p);
    add(arc[4 * c + s], p - 1);
    add(arc[4 * c + (s + 2) % 4], p - 1);
    std::erase_if(terms, [](auto const& t) { return t.second == 0; });
    search.constraints.push_back(std::move(terms));
  }
  BigInt total = search.count(std::vector<long>(arcs, -1));
  for (std::size_t j = 0; j < l.free_loops(); ++j) {
    total *= p;
  }
  return total;
}

BigInt determinant(LinkDiagram const& l) {
  if (l.crossing_count() == 0) {
    return l.free_loops() <= 1 ? 1 : 0;
  }
  if (l.free_loops() > 0) {
    return 0;
  }
  auto cb = checkerboard(l);
  std::vector<std::size_t> index(l.face_count(), kNone);
  std::size_t whites = 0;
  for (std::size_t f = 0; f < l.face_count(); ++f) {
    if (!cb.is_black(f)) {
      index[f] = whites++;
    }
  }
  IntMatrix g(whites, whites);
  for (std::size_t c = 0; c < l.crossing_count(); ++c) {
    std::size_t s = l.under_slot(c);
    // White corners are either {s, s+2} (after an under dart) or {s+1, s+3}.
    std::size_t w = cb.is_black(l.corner_face(4 * c + s)) ? (s + 1) % 4 : s;
    long eta      = w == s ? 1 : -1;
    auto i        = index[l.corner_face(4 * c + w)];
    auto j        = index[l.corner_face(4 * c + (w + 2) % 4)];
    if (i == j) {
      continue;
    }
    g(i, j) -= eta;
    g(j, i) -= eta;
    g(i, i) += eta;
    g(j, j) += eta;
  }
  // Drop the unbounded face.
  auto u = index[l.unbounded_face()];
  IntMatrix reduced(whites - 1, whites - 1);
  for (std::size_t i = 0, ri = 0; i < whites; ++i) {
    if (i == u) {
      continue;
    }
    for (std::size_t j = 0, rj = 0; j < whites; ++j) {
      if (j == u) {
        continue;
      }
      reduced(ri, rj++) = g(i, j);
    }
    ++ri;
  }
  return abs(bareiss_determinant(std::move(reduced)));
}

}  // namespace thomp
