#include "coarse/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coarse/certifier.hpp"
#include "coarse/cone_refuter.hpp"
#include "coarse/planar_map.hpp"
#include "coarse/presentation.hpp"
#include "coarse/range.hpp"
#include "coarse/tangle.hpp"

namespace coarse {

namespace {

class user_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw user_error("cannot open " + path);
  buf << f.rdbuf();
  return buf.str();
}

PlanarMap load_map(const std::string& path, std::istream& in) {
  try {
    return parse_map(read_input(path, in));
  } catch (const map_error& e) {
    throw user_error(path + ": " + e.what());
  }
}

std::string join(const std::vector<Integer>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out + ")";
}

int cmd_tangle(const std::string& text, std::ostream& out) {
  TangleExpr t = parse_tangle(text);
  out << "ast: " << format_tangle_ast(t) << "\n";
  out << "expr: " << format_tangle(t) << "\n";
  out << "leaves: " << t.leaf_count() << "\n";
  if (is_rational_shape(t)) {
    try {
      out << "fraction: " << fraction_eval(t).to_string() << "\n";
    } catch (const arith_error&) {
      out << "fraction: undefined\n";
    }
  }
  return 0;
}

int cmd_map(const PlanarMap& m, std::ostream& out) {
  out << "vertices: " << m.vertex_count() << "\n";
  out << "edges: " << m.edge_count() << "\n";
  out << "faces: " << m.face_count() << "\n";
  out << "euler: " << m.euler_characteristic() << "\n";
  for (std::size_t f : m.faces_in_declaration_order()) {
    std::string word;
    for (const auto& oe : boundary_word(m, f)) {
      word += " " + m.edge(oe.edge).name() + (oe.exponent < 0 ? "^-1" : "");
    }
    out << "face " << m.faces()[f].name << (f == m.outer_face() ? " (outer)" : "") << ":" << word << "\n";
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coarse presentations and non-left-orderability checks for double branched covers", "coarse"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print the build identifier");

  std::string tangle_text;
  auto* tangle_cmd = app.add_subcommand("tangle", "Parse a tangle expression");
  tangle_cmd->add_option("expr", tangle_text, "Tangle expression")->required();

  std::string range_text;
  bool range_refine = false;
  auto* range_cmd = app.add_subcommand("range", "Universal range of a tangle expression");
  range_cmd->add_option("expr", range_text, "Tangle expression")->required();
  range_cmd->add_flag("--refine", range_refine, "Sharper rule for sums of two same-sign inverse tangles");

  std::string map_file;
  auto* map_cmd = app.add_subcommand("map", "Validate a map file and list its faces");
  map_cmd->add_option("file", map_file, "Map file or -")->required();

  std::string present_file, present_level = "brunner";
  bool present_refine = false;
  auto* present_cmd = app.add_subcommand("present", "Print a presentation");
  present_cmd->add_option("file", present_file, "Map file or -")->required();
  present_cmd->add_option("--level", present_level, "brunner, reduced or coarse")
      ->check(CLI::IsMember({"brunner", "reduced", "coarse"}));
  present_cmd->add_flag("--refine", present_refine, "Refined ranges (coarse level)");

  std::string h1_file, h1_level = "brunner";
  auto* h1_cmd = app.add_subcommand("h1", "First homology of the double branched cover");
  h1_cmd->add_option("file", h1_file, "Map file or -")->required();
  h1_cmd->add_option("--level", h1_level, "brunner or reduced")->check(CLI::IsMember({"brunner", "reduced"}));

  std::string certify_file, replay_file;
  bool certify_refine = false;
  auto* certify_cmd = app.add_subcommand("certify", "Check the non-left-orderability criteria");
  certify_cmd->add_option("file", certify_file, "Map file or -")->required();
  certify_cmd->add_option("--replay", replay_file, "Certificate to re-check against the map");
  certify_cmd->add_flag("--refine", certify_refine, "Use refined ranges");

  std::string refute_file;
  BallOptions ball;
  auto* refute_cmd = app.add_subcommand("refute", "Search for a left-order sign pattern on a ball");
  refute_cmd->add_option("file", refute_file, "Presentation file or -")->required();
  refute_cmd->add_option("--radius", ball.radius, "Ball radius")->required()->check(CLI::PositiveNumber);
  refute_cmd->add_option("--max-words", ball.max_words, "Word enumeration budget");
  refute_cmd->add_option("--slack", ball.slack, "Extra rewriting length");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (show_version) {
      out << kVersion << "\n";
      return 0;
    }
    if (tangle_cmd->parsed()) return cmd_tangle(tangle_text, out);
    if (range_cmd->parsed()) {
      out << range_of_expr(parse_tangle(range_text), range_refine).to_string() << "\n";
      return 0;
    }
    if (map_cmd->parsed()) return cmd_map(load_map(map_file, in), out);
    if (present_cmd->parsed()) {
      PlanarMap m = load_map(present_file, in);
      if (present_level == "coarse") out << format_coarse(coarse_brunner(m, present_refine));
      else if (present_level == "reduced") out << format_presentation(reduced_brunner(m));
      else out << format_presentation(brunner(m));
      return 0;
    }
    if (h1_cmd->parsed()) {
      PlanarMap m = load_map(h1_file, in);
      Presentation p = h1_level == "reduced" ? reduced_brunner(m) : brunner(m);
      out << "diagonal: " << join(h1_invariants(p)) << "\n";
      out << "order: " << h1_order(p).str() << "\n";
      return 0;
    }
    if (certify_cmd->parsed()) {
      CoarsePresentation cp = coarse_brunner(load_map(certify_file, in), certify_refine);
      if (!replay_file.empty()) {
        Certificate recorded = parse_certificate(read_input(replay_file, in));
        ReplayResult r = replay_certificate(recorded, cp);
        out << format_certificate(r.recomputed) << r.message << "\n";
        return r.ok ? 0 : 1;
      }
      Certificate c = certify(cp);
      out << format_certificate(c);
      return c.verdict == Verdict::NotLeftOrderable ? 0 : 2;
    }
    if (refute_cmd->parsed()) {
      Presentation p = parse_presentation(read_input(refute_file, in));
      RefuteResult r = refute(p, ball);
      out << format_certificate(r.certificate);
      return r.certificate.verdict == Verdict::NotLeftOrderable ? 0 : 2;
    }
    out << app.help();
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace coarse
