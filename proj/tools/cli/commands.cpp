#include <fstream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "cli/cli.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/intervals.hpp"
#include "dyadic/isomorphism.hpp"
#include "dyadic/oracle.hpp"
#include "dyadic/pipeline.hpp"

namespace dyadic::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

bool looks_like_point(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t");
  return pos != std::string::npos && s[pos] == '(';
}

template <class T>
void write_points(std::ostream& os, const std::vector<T>& pts) {
  for (const auto& p : pts) {
    if constexpr (std::is_same_v<T, Vec2>) {
      os << format_point(p) << "\n";
    } else {
      os << format_dyadic(p) << "\n";
    }
  }
}

struct Args {
  std::string triangle, t1, t2, map, gens, interval;
  std::string a, b;
  std::size_t vertex = 0, v1 = 0, v2 = 0;
  int depth = 0, steps = 0;
  std::optional<int> budget;
  bool trace = false, verbose = false, representative = false, no_grid = false;
};

void add_triangle(CLI::App* cmd, std::string& target, const std::string& name = "--triangle,-t") {
  cmd->add_option(name, target, "three points (x,y);(x,y);(x,y) or a hat T{i,j,m,n}")->required();
}

void add_vertex(CLI::App* cmd, std::size_t& target, const std::string& name = "--vertex") {
  cmd->add_option(name, target, "pointed vertex")->check(CLI::Range(0, 2));
}

void print_iso(std::ostream& os, const IsoResult& r) {
  os << (r.isomorphic ? "true" : "false") << "\n";
  if (r.witness) os << format_affine_map(*r.witness) << "\n";
}

}  // namespace

CommandOutput dispatch(std::span<const std::string> args) {
  CLI::App app{"Exact classification of dyadic triangles", "dyadic"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output_file;
  app.add_option("-o,--output", output_file, "write output to FILE");

  Args a;
  std::ostringstream out;
  std::function<void()> run;

  auto* encode_cmd = app.add_subcommand("encode", "encoding triple of a pointed triangle");
  add_triangle(encode_cmd, a.triangle);
  add_vertex(encode_cmd, a.vertex);
  encode_cmd->add_flag("--trace", a.trace, "also print the transform trace");
  encode_cmd->callback([&] {
    run = [&] {
      const auto rep = to_representative(parse_triangle(a.triangle), a.vertex);
      out << format_triple(rep.triple) << "\n";
      if (a.trace) out << format_trace(rep.trace);
    };
  });

  auto* encode_all_cmd = app.add_subcommand("encode-all", "encoding triples at every vertex and of the mirror image");
  add_triangle(encode_all_cmd, a.triangle);
  encode_all_cmd->add_flag("--verbose", a.verbose, "label each triple with its vertex");
  encode_all_cmd->callback([&] {
    run = [&] {
      const Triangle t = parse_triangle(a.triangle);
      if (a.verbose) {
        for (const auto& e : encode_all_entries(t)) {
          out << (e.mirrored ? "mirror " : "") << "vertex " << e.vertex << ": " << format_triple(e.rep.triple) << "\n";
        }
      } else {
        for (const auto& e : encode_all(t)) out << format_triple(e) << "\n";
      }
    };
  });

  auto* normalize_cmd = app.add_subcommand("normalize", "hat form of a pointed triangle with its transform trace");
  add_triangle(normalize_cmd, a.triangle);
  add_vertex(normalize_cmd, a.vertex);
  normalize_cmd->add_flag("--representative", a.representative, "continue to the representative hat");
  normalize_cmd->callback([&] {
    run = [&] {
      const Triangle t = parse_triangle(a.triangle);
      if (a.representative) {
        const auto rep = to_representative(t, a.vertex);
        out << format_hat(HatParams::hat(rep.triple.i(), rep.triple.j(), rep.triple.m())) << "\n"
            << format_trace(rep.trace);
      } else {
        const auto hat = normalize_pointed(t, a.vertex);
        out << format_hat(hat.hat) << "\n" << format_trace(hat.trace);
      }
    };
  });

  auto* iso_cmd = app.add_subcommand("iso", "isomorphism of two triangles, with a witness map");
  add_triangle(iso_cmd, a.t1, "--t1");
  add_triangle(iso_cmd, a.t2, "--t2");
  iso_cmd->callback([&] {
    run = [&] { print_iso(out, isomorphic(parse_triangle(a.t1), parse_triangle(a.t2))); };
  });

  auto* piso_cmd = app.add_subcommand("pointed-iso", "pointed oriented isomorphism, with a witness map");
  add_triangle(piso_cmd, a.t1, "--t1");
  add_triangle(piso_cmd, a.t2, "--t2");
  std::optional<std::size_t> both;
  piso_cmd->add_option("--vertex", both, "pointed vertex of both triangles")->check(CLI::Range(0, 2));
  add_vertex(piso_cmd, a.v1, "--v1");
  add_vertex(piso_cmd, a.v2, "--v2");
  piso_cmd->callback([&] {
    run = [&] {
      const std::size_t v1 = piso_cmd->count("--v1") ? a.v1 : both.value_or(0);
      const std::size_t v2 = piso_cmd->count("--v2") ? a.v2 : both.value_or(0);
      print_iso(out, pointed_isomorphic(parse_triangle(a.t1), v1, parse_triangle(a.t2), v2));
    };
  });

  auto* boundary_cmd = app.add_subcommand("boundary-type", "side types of v0v1, v1v2, v2v0");
  add_triangle(boundary_cmd, a.triangle);
  boundary_cmd->callback([&] {
    run = [&] { out << format_boundary_type(boundary_type(parse_triangle(a.triangle))) << "\n"; };
  });

  auto* interval_cmd = app.add_subcommand("interval-type", "type k of the dyadic interval [a, b]");
  interval_cmd->add_option("a", a.a, "endpoint")->required();
  interval_cmd->add_option("b", a.b, "endpoint")->required();
  interval_cmd->callback([&] {
    run = [&] { out << interval_type(parse_dyadic(a.a), parse_dyadic(a.b)) << "\n"; };
  });

  auto* side_cmd = app.add_subcommand("side-type", "type of the segment between two points");
  side_cmd->add_option("p", a.a, "point (x,y)")->required();
  side_cmd->add_option("q", a.b, "point (x,y)")->required();
  side_cmd->callback([&] {
    run = [&] { out << side_type(parse_point(a.a), parse_point(a.b)) << "\n"; };
  });

  auto* closure_cmd = app.add_subcommand("closure", "bounded midpoint closure of a generator set");
  closure_cmd->add_option("--gen,-g", a.gens, "generators separated by ';' (numbers or points)")->required();
  closure_cmd->add_option("--steps,-s", a.steps, "number of closure steps")->required()->check(CLI::NonNegativeNumber);
  closure_cmd->callback([&] {
    run = [&] {
      const auto parts = split(a.gens, ';');
      if (!parts.empty() && looks_like_point(parts.front())) {
        std::vector<Vec2> g;
        for (const auto& p : parts) g.push_back(parse_point(p));
        write_points(out, closure(g, a.steps).points);
      } else {
        std::vector<Dyadic> g;
        for (const auto& p : parts) g.push_back(parse_dyadic(p));
        write_points(out, closure(g, a.steps).points);
      }
    };
  });

  auto* gen_cmd = app.add_subcommand("generates", "do the generators reach every grid point of a region");
  gen_cmd->add_option("--gen,-g", a.gens, "generators separated by ';'")->required();
  auto* region_iv = gen_cmd->add_option("--interval", a.interval, "interval lo;hi");
  auto* region_tri = gen_cmd->add_option("--triangle,-t", a.triangle, "triangle region");
  region_iv->excludes(region_tri);
  gen_cmd->add_option("--depth,-d", a.depth, "grid depth")->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--budget", a.budget, "closure step budget (default 2*depth+2)")->check(CLI::NonNegativeNumber);
  gen_cmd->callback([&] {
    if (a.interval.empty() && a.triangle.empty()) throw CLI::RequiredError("--interval or --triangle");
    run = [&] {
      const auto parts = split(a.gens, ';');
      auto report = [&](const auto& r, auto fmt) {
        out << (r.generated ? "true" : "false") << "\n";
        if (r.missing) {
          out << "missing " << fmt(*r.missing) << "\n";
          if (r.inconclusive) out << "inconclusive at budget " << r.step_budget << "\n";
        }
      };
      if (!a.triangle.empty()) {
        std::vector<Vec2> g;
        for (const auto& p : parts) g.push_back(parse_point(p));
        report(generates(g, parse_triangle(a.triangle), a.depth, a.budget), format_point);
      } else {
        std::vector<Dyadic> g;
        for (const auto& p : parts) g.push_back(parse_dyadic(p));
        const auto ends = split(a.interval, ';');
        if (ends.size() != 2) throw ParseError("invalid interval '" + a.interval + "': expected lo;hi");
        report(generates(g, Interval{parse_dyadic(ends[0]), parse_dyadic(ends[1])}, a.depth, a.budget),
               format_dyadic);
      }
    };
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "grid points of a triangle at a given depth");
  add_triangle(enum_cmd, a.triangle);
  enum_cmd->add_option("--depth,-d", a.depth, "grid depth")->required()->check(CLI::NonNegativeNumber);
  enum_cmd->callback([&] {
    run = [&] { write_points(out, enumerate_points(parse_triangle(a.triangle), a.depth)); };
  });

  auto* verify_cmd = app.add_subcommand("verify", "check that a map is an isomorphism from t1 onto t2");
  verify_cmd->add_option("--map,-m", a.map, "[[a,b],[c,d]]+(tx,ty)")->required();
  add_triangle(verify_cmd, a.t1, "--t1");
  add_triangle(verify_cmd, a.t2, "--t2");
  verify_cmd->callback([&] {
    run = [&] {
      const Triangle t1 = parse_triangle(a.t1), t2 = parse_triangle(a.t2);
      require_nondegenerate(t1);
      require_nondegenerate(t2);
      out << (is_isomorphism_between(parse_affine_map(a.map), t1, t2) ? "true" : "false") << "\n";
    };
  });

  auto* render_cmd = app.add_subcommand("render", "SVG drawing of a triangle and its grid points");
  add_triangle(render_cmd, a.triangle);
  render_cmd->add_option("--depth,-d", a.depth, "grid depth")->check(CLI::NonNegativeNumber);
  render_cmd->add_flag("--no-grid", a.no_grid, "omit the unit grid");
  render_cmd->callback([&] {
    run = [&] { out << render_svg(parse_triangle(a.triangle), a.depth, SvgOptions{!a.no_grid}); };
  });

  CommandOutput result;
  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 consumes from the back
    app.parse(argv);
    run();
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    return {kExitParse, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kExitParse, "", std::string("error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kExitDomain, "", std::string("error: ") + e.what() + "\n"};
  }

  if (!output_file.empty()) {
    std::ofstream f(output_file, std::ios::binary);
    if (!(f << out.str())) return {kExitDomain, "", "error: cannot write " + output_file + "\n"};
    return result;
  }
  result.out = out.str();
  return result;
}

}  // namespace dyadic::cli
