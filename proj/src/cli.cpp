#include "thomp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "thomp/action.hpp"
#include "thomp/coloring.hpp"
#include "thomp/error.hpp"
#include "thomp/fixtures.hpp"
#include "thomp/fp.hpp"
#include "thomp/links.hpp"
#include "thomp/sampling.hpp"
#include "thomp/svg.hpp"

namespace thomp {

namespace {

using nlohmann::json;

// Determinants above this size are skipped in census tables; the Goeritz
// matrix of a random F_15 member can have several hundred rows.
constexpr std::size_t kCensusDeterminantLimit = 160;

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot read '" + path + "'");
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_fixture(std::string const& name) {
  auto names = fixture_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string trim_left(std::string const& s) {
  auto pos = s.find_first_not_of(" \t\r\n");
  return pos == std::string::npos ? "" : s.substr(pos);
}

bool looks_like_pd(std::string const& text) {
  return text.find("PD[") != std::string::npos;
}

std::string element_text(TreeDiagram const& d) {
  return "# thomp element v1\n" + d.to_string() + "\n";
}

std::string tuple(std::vector<std::uint64_t> const& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s + ")";
}

std::string big(BigInt const& x) {
  return x.str();
}

struct Options {
  unsigned arity          = 2;
  std::uint64_t p         = 0;
  unsigned q              = 0;
  std::string format;
  std::string output;
  std::uint64_t seed      = 1;
  std::size_t count       = 20;
  bool allow_nonreduced   = false;
  std::vector<std::string> operands;
};

class Emitter {
 public:
  Emitter(std::string const& path, std::ostream& out) : path_(path), out_(out) {}
  void emit(std::string const& text) {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path_);
    if (!f) {
      throw Error("cannot write '" + path_ + "'");
    }
    f << text;
  }

 private:
  std::string path_;
  std::ostream& out_;
};

LinkDiagram link_for(TreeDiagram const& d, bool allow_nonreduced) {
  JonesOptions opt;
  opt.allow_nonreduced = allow_nonreduced;
  return jones_link(d, opt);
}

int cmd_member(Options const& o, std::ostream& out) {
  auto d     = resolve_element(o.operands.at(0), o.arity);
  auto table = residue_table(d, o.p);
  bool ok    = !table.first_mismatch().has_value();
  if (o.format == "json") {
    json j = {{"format", "thomp-member"},
              {"version", 1},
              {"element", reduce(d).to_string()},
              {"p", o.p},
              {"q", ord2(o.p)},
              {"member", ok},
              {"residues_domain", table.domain_residues},
              {"residues_range", table.range_residues}};
    if (auto w = non_membership_witness(d, o.p)) {
      j["witness"] = w->to_string();
    }
    out << j.dump(2) << "\n";
    return ok ? kExitOk : kExitNegative;
  }
  out << "# thomp member v1\n"
      << "element " << reduce(d).to_string() << "\n"
      << "p " << o.p << "\nq " << ord2(o.p) << "\n"
      << "leaf domain-leaf rho range-leaf rho\n";
  for (std::size_t i = 0; i < table.domain_leaves.size(); ++i) {
    out << i << " " << table.domain_leaves[i].to_string() << " " << table.domain_residues[i] << " "
        << table.range_leaves[i].to_string() << " " << table.range_residues[i] << "\n";
  }
  out << "residues+ " << tuple(table.domain_residues) << "\n"
      << "residues- " << tuple(table.range_residues) << "\n";
  if (!ok) {
    auto i = *table.first_mismatch();
    out << "witness leaf " << i << " " << non_membership_witness(d, o.p)->to_string() << "\n";
  }
  out << "verdict " << (ok ? "member" : "non-member") << "\n";
  return ok ? kExitOk : kExitNegative;
}

int cmd_link(Options const& o, std::ostream& out) {
  auto d = resolve_element(o.operands.at(0), o.arity);
  Emitter sink(o.output, out);
  std::string fmt = o.format.empty() ? "pd" : o.format;
  if (fmt == "svg") {
    std::optional<std::uint64_t> p;
    if (o.p) {
      p = o.p;
    }
    sink.emit(render_svg(d, p, o.allow_nonreduced));
    return kExitOk;
  }
  if (d.caret_count() == 0) {
    throw TrivialElement("the identity has no link diagram to draw");
  }
  auto l = link_for(d, o.allow_nonreduced);
  if (fmt == "json") {
    json j = {{"format", "thomp-link"},
              {"version", 1},
              {"element", d.to_string()},
              {"crossings", l.crossing_count()},
              {"components", components(l)},
              {"faces", l.face_count()},
              {"pd", pd_code(l)}};
    sink.emit(j.dump(2) + "\n");
    return kExitOk;
  }
  sink.emit(pd_code(l));
  return kExitOk;
}

LinkDiagram resolve_link(Options const& o) {
  auto const& arg = o.operands.at(0);
  if (is_fixture(arg)) {
    auto f = fixture(arg);
    if (f.pd) {
      return parse_pd(*f.pd);
    }
  }
  if (std::filesystem::is_regular_file(arg)) {
    auto text = read_file(arg);
    if (looks_like_pd(text)) {
      return parse_pd(text);
    }
  } else if (looks_like_pd(arg)) {
    return parse_pd(arg);
  }
  return link_for(resolve_element(arg, o.arity), o.allow_nonreduced);
}

int cmd_color(Options const& o, std::ostream& out) {
  ord2(o.p);
  auto l      = resolve_link(o);
  auto result = dehn_colorings(l, o.p);
  auto cb     = checkerboard(l);
  bool colorable = result.nontrivial.has_value();
  if (o.format == "json") {
    json j = {{"format", "thomp-coloring"},
              {"version", 1},
              {"p", o.p},
              {"crossings", l.crossing_count()},
              {"faces", l.face_count()},
              {"unbounded_face", l.unbounded_face()},
              {"count", big(result.count)},
              {"nontrivial", colorable}};
    if (colorable) {
      json faces = json::object();
      for (std::size_t f = 0; f < result.nontrivial->faces.size(); ++f) {
        faces[std::to_string(f)] = result.nontrivial->faces[f];
      }
      j["sample"] = faces;
    }
    out << j.dump(2) << "\n";
    return colorable ? kExitOk : kExitNegative;
  }
  out << "# thomp coloring v1\n"
      << "p " << o.p << "\ncrossings " << l.crossing_count() << "\nfaces " << l.face_count()
      << "\nunbounded " << l.unbounded_face() << "\ncount " << result.count << "\n";
  if (colorable) {
    out << "sample";
    for (auto v : result.nontrivial->faces) {
      out << " " << v;
    }
    out << "\ntrivial " << (is_trivial(*result.nontrivial, cb) ? "yes" : "no") << "\n"
        << "verdict nontrivial coloring\n";
  } else {
    out << "verdict only trivial colorings\n";
  }
  return colorable ? kExitOk : kExitNegative;
}

struct CensusRow {
  std::size_t carets    = 0;
  std::size_t crossings = 0;
  std::size_t comps     = 0;
  bool colorable        = false;
  std::optional<BigInt> det;
};

CensusRow census_sample(std::uint64_t p, std::uint64_t seed, std::size_t index) {
  Sampler s(seed + 0x9E3779B97F4A7C15ull * (index + 1));
  auto d = s.member(p);
  auto l = jones_link(d);
  CensusRow row;
  row.carets    = d.caret_count();
  row.crossings = l.crossing_count();
  row.comps     = components(l);
  row.colorable = dehn_colorings(l, p).nontrivial.has_value();
  if (row.crossings <= kCensusDeterminantLimit) {
    row.det = determinant(l);
  }
  return row;
}

int cmd_census(Options const& o, std::ostream& out) {
  ord2(o.p);
  std::vector<CensusRow> rows(o.count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i = next++; i < o.count; i = next++) {
      try {
        rows[i] = census_sample(o.p, o.seed, i);
      } catch (...) {
        std::lock_guard<std::mutex> g(failure_lock);
        failure = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(o.count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  std::size_t colorable = 0;
  std::map<std::string, std::size_t> hist;
  out << "# thomp census v1\n"
      << "p " << o.p << " count " << o.count << " seed " << o.seed << "\n"
      << "index carets crossings components colorable det\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto const& r = rows[i];
    colorable += r.colorable ? 1 : 0;
    std::string det = r.det ? big(*r.det) : "-";
    ++hist[det];
    out << i << " " << r.carets << " " << r.crossings << " " << r.comps << " "
        << (r.colorable ? "yes" : "no") << " " << det << "\n";
  }
  out << "colorable " << colorable << "/" << o.count << "\n";
  out << "determinants";
  for (auto const& [det, n] : hist) {
    out << " " << det << ":" << n;
  }
  out << "\n";
  return colorable == o.count ? kExitOk : kExitNegative;
}

}  // namespace

TreeDiagram resolve_element(std::string const& arg, unsigned arity) {
  if (is_fixture(arg)) {
    auto f = fixture(arg);
    if (!f.element) {
      throw Error("fixture '" + arg + "' is a knot diagram, not a group element");
    }
    return *f.element;
  }
  if (std::filesystem::is_regular_file(arg)) {
    auto text = read_file(arg);
    if (trim_left(text).starts_with("{")) {
      return TreeDiagram::from_json(text);
    }
    return TreeDiagram::parse(text, arity);
  }
  if (arg.find('|') != std::string::npos) {
    return TreeDiagram::parse(arg, arity);
  }
  return evaluate_word(GroupWord::parse(arg, arity));
}

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thompson's group F, the subgroups F_p, Jones links and Dehn colorings", "thomp"};
  app.require_subcommand(1);
  Options o;

  auto add_arity = [&](CLI::App* c) {
    c->add_option("-n,--arity", o.arity, "arity of the ambient group F(n)")->check(CLI::Range(2, 256));
  };
  auto* reduce_c = app.add_subcommand("reduce", "print the reduced diagram");
  reduce_c->add_option("element", o.operands)->required()->expected(1);
  add_arity(reduce_c);
  auto* mul_c = app.add_subcommand("mul", "product a*b (a then b)");
  mul_c->add_option("elements", o.operands)->required()->expected(2);
  add_arity(mul_c);
  auto* inv_c = app.add_subcommand("inv", "inverse");
  inv_c->add_option("element", o.operands)->required()->expected(1);
  add_arity(inv_c);
  auto* eval_c = app.add_subcommand("eval", "evaluate a word such as \"x0^-1 x1 x0\"");
  eval_c->add_option("word", o.operands)->required()->expected(1);
  add_arity(eval_c);

  auto* member_c = app.add_subcommand("member", "membership in F_p with the residue table");
  member_c->add_option("element", o.operands)->required()->expected(1);
  member_c->add_option("-p", o.p, "odd modulus")->required();
  member_c->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  add_arity(member_c);

  auto* embed_c = app.add_subcommand("embed", "phi_q: F(2^q) -> F");
  embed_c->add_option("element", o.operands)->required()->expected(1);
  embed_c->add_option("-q", o.q)->required()->check(CLI::Range(1, 8));
  auto* factor_c = app.add_subcommand("factor", "inverse of phi_q on F_p");
  factor_c->add_option("element", o.operands)->required()->expected(1);
  factor_c->add_option("-q", o.q)->required()->check(CLI::Range(1, 8));

  auto* link_c = app.add_subcommand("link", "Jones' link diagram");
  link_c->add_option("element", o.operands)->required()->expected(1);
  link_c->add_option("--format", o.format)->check(CLI::IsMember({"pd", "svg", "json"}));
  link_c->add_option("-o,--output", o.output);
  link_c->add_option("-p", o.p, "label strip regions in the SVG");
  link_c->add_flag("--allow-nonreduced", o.allow_nonreduced);

  auto* color_c = app.add_subcommand("color", "Dehn p-colorings of an element's link or a PD code");
  color_c->add_option("target", o.operands)->required()->expected(1);
  color_c->add_option("-p", o.p)->required();
  color_c->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  color_c->add_flag("--allow-nonreduced", o.allow_nonreduced);

  auto* census_c = app.add_subcommand("census", "links of random members of F_p");
  census_c->add_option("-p", o.p)->required();
  census_c->add_option("--count", o.count);
  census_c->add_option("--seed", o.seed);

  auto* fixture_c = app.add_subcommand("fixture", "print a named fixture, or list them");
  fixture_c->add_option("name", o.operands)->expected(0, 1);
  fixture_c->add_option("-o,--output", o.output);

  std::vector<std::string> argv_store{"thomp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char const*> argv;
  for (auto const& a : argv_store) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (reduce_c->parsed()) {
      out << element_text(reduce(resolve_element(o.operands[0], o.arity)));
    } else if (mul_c->parsed()) {
      out << element_text(multiply(resolve_element(o.operands[0], o.arity),
                                   resolve_element(o.operands[1], o.arity)));
    } else if (inv_c->parsed()) {
      out << element_text(inverse(resolve_element(o.operands[0], o.arity)));
    } else if (eval_c->parsed()) {
      out << element_text(evaluate_word(GroupWord::parse(o.operands[0], o.arity)));
    } else if (member_c->parsed()) {
      return cmd_member(o, out);
    } else if (embed_c->parsed()) {
      auto d = resolve_element(o.operands[0], 1u << o.q);
      out << element_text(reduce(phi_q(d, o.q)));
    } else if (factor_c->parsed()) {
      out << element_text(unphi_q(resolve_element(o.operands[0], 2), o.q));
    } else if (link_c->parsed()) {
      return cmd_link(o, out);
    } else if (color_c->parsed()) {
      return cmd_color(o, out);
    } else if (census_c->parsed()) {
      return cmd_census(o, out);
    } else if (fixture_c->parsed()) {
      if (o.operands.empty()) {
        for (auto const& n : fixture_names()) {
          out << n << "\n";
        }
      } else {
        Emitter(o.output, out).emit(fixture(o.operands[0]).text());
      }
    }
    return kExitOk;
  } catch (ParseError const& e) {
    err << "thomp: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (InvalidModulus const& e) {
    err << "thomp: " << e.what() << "\n";
    return kExitUsage;
  } catch (ArityMismatch const& e) {
    err << "thomp: " << e.what() << "\n";
    return kExitUsage;
  } catch (Error const& e) {
    err << "thomp: " << e.what() << "\n";
    return kExitNegative;
  }
}

}  // namespace thomp
