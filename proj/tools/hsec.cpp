// Command-line front end. Exit status: 0 success, 1 domain error, 2 usage.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "hsec/errors.hpp"
#include "hsec/flow.hpp"
#include "hsec/io.hpp"
#include "hsec/oracle.hpp"
#include "hsec/perm.hpp"
#include "hsec/section.hpp"
#include "hsec/solver.hpp"
#include "hsec/tables.hpp"

using namespace hsec;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& source) {
  if (!source.empty() && source.front() == '{') return source;
  if (source == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(source);
  if (!f) throw UsageError("cannot read " + source);
  return {std::istreambuf_iterator<char>(f), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Options {
  std::string input;
  std::string output;
  std::string max_dx;
  std::string perm;
  bool dfs = false;
  bool no_pruning = false;
  bool all = false;
  std::string format = "text";
  bool closed_form = false;
  bool allow_top = false;
  bool list = false;
  std::string max_slope;
  std::uint64_t n = 1000;
  std::uint64_t seed = 0;
  std::string mode = "iid";
  int bins = 20;
  std::string histogram;
  std::string points;
  std::string summary;
  std::string highlight = "smallest";
};

SurfaceInput load(const Options& o) {
  SurfaceInput in = parse_surface_input(read_text(o.input));
  if (!o.max_dx.empty()) {
    try {
      in.max_dx = parse_rational(o.max_dx);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--max-dx: ") + e.what());
    }
    if (*in.max_dx <= 0) throw UsageError("--max-dx must be positive");
  }
  return in;
}

Permutation perm_arg(const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const InvalidPermutation&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

int cmd_sigma(const Options& o) {
  GluingMap s = compute_sigma(perm_arg(o.perm));
  write_text(o.output, Json(s.values).dump() + "\n");
  return 0;
}

int cmd_rauzy_class(const Options& o) {
  auto cls = rauzy_class(perm_arg(o.perm), o.dfs ? Traversal::DepthFirst : Traversal::BreadthFirst);
  Json out = Json::array();
  for (const auto& p : cls) out.push_back(permutation_json(p));
  write_text(o.output, out.dump() + "\n");
  return 0;
}

int cmd_describe(const Options& o) {
  PolytopeDescription d = polytope_description(perm_arg(o.perm));
  if (o.format == "json") {
    Json out;
    out["pi"] = permutation_json(d.pi);
    out["equalities"] = Json::array();
    for (const auto& c : d.equalities) out["equalities"].push_back(c.to_string());
    out["inequalities"] = Json::array();
    for (const auto& c : d.inequalities) out["inequalities"].push_back(c.to_string());
    write_text(o.output, dump(out));
  } else {
    write_text(o.output, d.to_text());
  }
  return 0;
}

int cmd_solve(const Options& o) {
  SurfaceInput in = load(o);
  in.a.reset();
  in.h.reset();
  write_text(o.output, dump(surface_json(in.surface())));
  return 0;
}

int cmd_check(const Options& o) {
  SurfaceInput in = load(o);
  ZipperedRectangles z = in.surface();
  auto violations = check_validity(z);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "violated " << v.id() << ": " << v.description << "\n";
    return 1;
  }
  Json out;
  out["valid"] = true;
  if (in.pi.size() == 4 && in.area == 1) {
    SectionPoint p = in.point();
    Membership mem = membership(p);
    if (!mem) {
      std::cerr << "violated " << mem.violated << "\n";
      return 1;
    }
    if (in.a && (surface_json(p.to_surface())["a"] != surface_json(z)["a"] ||
                 surface_json(p.to_surface())["h"] != surface_json(z)["h"])) {
      std::cerr << "violated solved heights: given a and h differ from the solved surface\n";
      return 1;
    }
    out["member"] = true;
    out["on_width_boundary"] = mem.on_width_boundary;
    out["bounded_regime"] = p.in_bounded_regime();
    out["epsilon"] = to_json(p.epsilon());
  } else {
    out["member"] = nullptr;
  }
  write_text(o.output, dump(out));
  return 0;
}

int cmd_candidates(const Options& o) {
  SurfaceInput in = load(o);
  ZipperedRectangles z = in.surface();
  Rational max_dx = in.working_length();
  auto cands = enumerate_candidates(z, max_dx, o.no_pruning ? Pruning::Off : Pruning::On);
  if (!o.all) cands = filter_positive_nonterminal(cands, z.m());
  SurfaceGeometry g = build_geometry(z);
  if (o.format == "json") {
    Json out = Json::array();
    for (const auto& c : cands) {
      Json j = path_json(c);
      auto v = validity_violation(c, z, max_dx);
      j["valid"] = !v;
      j["violation"] = v ? Json(to_string(*v)) : Json(nullptr);
      j["traced"] = c.dx > 0 && c.dy >= 0 && trace_exists(c, g);
      out.push_back(j);
    }
    write_text(o.output, dump(out));
    return 0;
  }
  std::ostringstream os;
  for (int k = 0; k <= z.m(); ++k) {
    bool any = false;
    for (const auto& c : cands) {
      if (c.start_vertex != k) continue;
      if (!any) os << "x" << k << ":\n";
      any = true;
      os << "  " << c.notation() << " = " << to_string(c.dy) << "/" << to_string(c.dx);
      if (c.dx > 0) os << " = " << to_string(c.slope());
      auto v = validity_violation(c, z, max_dx);
      if (v)
        os << "  invalid " << to_string(*v);
      else
        os << (c.dy >= 0 && trace_exists(c, g) ? "  traced" : "  no trace");
      os << "\n";
    }
  }
  write_text(o.output, os.str());
  return 0;
}

int cmd_slope(const Options& o) {
  SurfaceInput in = load(o);
  if (o.closed_form) {
    SaddleConnection c = closed_form_smallest_slope(in.point());
    write_text(o.output, dump(connection_json(c)));
    return 0;
  }
  SolverResult r = solve_smallest_slope(in.surface(), in.working_length());
  Json out = connection_json(r.connection);
  out["candidates_considered"] = r.considered;
  write_text(o.output, dump(out));
  return 0;
}

int cmd_oracle(const Options& o) {
  SurfaceInput in = load(o);
  ZipperedRectangles z = in.surface();
  Rational max_dx = in.working_length();
  if (!o.list) {
    write_text(o.output, dump(connection_json(brute_force_min_slope(z, max_dx, o.allow_top))));
    return 0;
  }
  Rational bound;
  if (!o.max_slope.empty()) {
    try {
      bound = parse_rational(o.max_slope);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--max-slope: ") + e.what());
    }
  } else {
    bound = brute_force_min_slope(z, max_dx, o.allow_top).slope;
  }
  Json out = Json::array();
  for (const auto& c : enumerate_connections(z, max_dx, bound, Rational(0), o.allow_top))
    out.push_back(connection_json(c));
  write_text(o.output, dump(out));
  return 0;
}

int cmd_return_map(const Options& o) {
  SurfaceInput in = load(o);
  ReturnStep step = return_map_step(in.point());
  Json out;
  out["return_time"] = to_json(step.return_time);
  out["used_oracle"] = step.used_oracle;
  out["transversal"] = connection_json(step.transversal);
  out["image"] = point_json(step.image);
  write_text(o.output, dump(out));
  return 0;
}

int cmd_sample(const Options& o) {
  Permutation pi = perm_arg(o.perm);
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.bins < 1) throw UsageError("--bins must be at least 1");
  SampleMode mode = o.mode == "orbit" ? SampleMode::Orbit : SampleMode::Iid;
  ReturnTimeStats st = sample_return_times(pi, o.n, o.seed, mode, o.bins);
  std::ostringstream csv;
  csv << "index,seed,permutation,return_time,return_time_float\n";
  for (const auto& s : st.samples) {
    csv << s.index << ',' << o.seed << ',' << s.point.pi.to_string() << ',' << to_string(s.return_time) << ','
        << fmt_double(to_double(s.return_time)) << "\n";
  }
  write_text(o.output, csv.str());
  if (!o.histogram.empty()) {
    std::ostringstream h;
    h << "bin,lo_float,hi_float,count\n";
    double width = (st.hist_hi - st.hist_lo) / o.bins;
    for (int b = 0; b < o.bins; ++b) {
      h << b << ',' << fmt_double(st.hist_lo + b * width) << ',' << fmt_double(st.hist_lo + (b + 1) * width) << ','
        << st.histogram[b] << "\n";
    }
    write_text(o.histogram, h.str());
  }
  if (!o.summary.empty()) {
    Json s;
    s["n"] = st.samples.size();
    s["min_float"] = fmt_double(st.min);
    s["max_float"] = fmt_double(st.max);
    s["mean_float"] = fmt_double(st.mean);
    write_text(o.summary, dump(s));
  }
  if (!o.points.empty()) {
    Json pts = Json::array();
    for (const auto& s : st.samples) pts.push_back(point_json(s.point));
    write_text(o.points, dump(pts));
  }
  return 0;
}

int cmd_render(const Options& o) {
  SurfaceInput in = load(o);
  ZipperedRectangles z = in.surface();
  std::optional<SaddleConnection> hl;
  Rational max_dx = in.working_length();
  if (o.highlight == "smallest") {
    hl = in_bounded_regime(z, max_dx) ? smallest_slope(z, max_dx) : brute_force_min_slope(z, max_dx, true);
  }
  write_text(o.output, render_svg(z, hl));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the Poincare section of the horocycle flow on H(2)"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("-o,--output", o.output, "Write the main output here instead of stdout");

  auto input_cmd = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("input", o.input, "Surface JSON: a file, - for stdin, or inline text starting with {")->required();
    c->add_option("--max-dx", o.max_dx, "Horizontal budget (default: the input's max_dx, else 1)");
    return c;
  };

  std::map<std::string, int (*)(const Options&)> handlers;

  auto* sigma = app.add_subcommand("sigma", "Gluing permutation sigma(0..m)");
  sigma->add_option("perm", o.perm, "Permutation, e.g. 4321 or [4,3,2,1]")->required();
  handlers["sigma"] = cmd_sigma;

  auto* rauzy = app.add_subcommand("rauzy-class", "Rauzy class as a sorted JSON array");
  rauzy->add_option("perm", o.perm, "Permutation")->required();
  rauzy->add_flag("--dfs", o.dfs, "Depth-first closure");
  handlers["rauzy-class"] = cmd_rauzy_class;

  auto* describe = app.add_subcommand("describe", "Equalities and inequalities of a section polytope");
  describe->add_option("perm", o.perm, "Permutation")->required();
  describe->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  handlers["describe"] = cmd_describe;

  input_cmd("solve", "Solve heights and a_1 from altitudes, widths and area");
  handlers["solve"] = cmd_solve;

  input_cmd("check", "Validity and section membership");
  handlers["check"] = cmd_check;

  auto* cands = input_cmd("candidates", "Labeled-tree candidates in (R1, R2) notation");
  cands->add_flag("--no-pruning", o.no_pruning, "Full two-way tree");
  cands->add_flag("--all", o.all, "Skip the positive/nonterminal filter");
  cands->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  handlers["candidates"] = cmd_candidates;

  auto* slope = input_cmd("slope", "Smallest-slope saddle connection from the pruned solver");
  slope->add_flag("--closed-form", o.closed_form, "Evaluate the slope tables instead (section points only)");
  handlers["slope"] = cmd_slope;

  auto* oracle = input_cmd("oracle", "Brute-force smallest slope");
  oracle->add_flag("--allow-top-crossings", o.allow_top, "Let connections cross rectangle tops");
  oracle->add_flag("--list", o.list, "List every connection up to --max-slope as a JSON array");
  oracle->add_option("--max-slope", o.max_slope, "Slope bound for --list (default: the minimum)");
  handlers["oracle"] = cmd_oracle;

  input_cmd("return-map", "One step of the return map");
  handlers["return-map"] = cmd_return_map;

  auto* sample = app.add_subcommand("sample", "Return-time samples as CSV");
  sample->add_option("--perm", o.perm, "Permutation")->required();
  sample->add_option("--seed", o.seed, "Generator seed")->required();
  sample->add_option("-n,--count", o.n, "Number of samples");
  sample->add_option("--mode", o.mode, "iid or orbit")->check(CLI::IsMember({"iid", "orbit"}));
  sample->add_option("--bins", o.bins, "Histogram bins");
  sample->add_option("--histogram", o.histogram, "Histogram CSV file");
  sample->add_option("--summary", o.summary, "Summary JSON file");
  sample->add_option("--points", o.points, "Sampled points as a JSON file");
  handlers["sample"] = cmd_sample;

  auto* render = input_cmd("render", "SVG figure of the rectangles");
  render->add_option("--highlight", o.highlight, "smallest or none")->check(CLI::IsMember({"smallest", "none"}));
  handlers["render"] = cmd_render;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string name = app.get_subcommands().front()->get_name();
  try {
    return handlers.at(name)(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
