#include "loopss/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "loopss/chart.hpp"
#include "loopss/json_out.hpp"
#include "loopss/model.hpp"

namespace loopss {

namespace {

struct RunConfig {
  std::string model_selector;
  int t_max = -1;  // -1 = pick from the dimension
  std::string format = "summary";
  std::string expect;
  std::string pages;
  std::string svg_path;
};

bool is_circle(const std::string& selector) { return selector == "circle"; }

ManifoldModel resolve_model(const std::string& selector) {
  auto colon = selector.find(':');
  std::string kind = selector.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : selector.substr(colon + 1);
  if (kind == "sphere" || kind == "cpn") {
    int n = 0;
    try {
      n = std::stoi(arg);
    } catch (const std::exception&) {
      throw ValidationError("model selector '" + selector + "' needs an integer parameter");
    }
    return kind == "sphere" ? sphere_model(n) : cpn_model(n);
  }
  if (kind == "custom") {
    if (arg.empty()) throw ValidationError("custom model selector needs a path");
    return load_model_file(arg);
  }
  throw ValidationError("unknown model '" + selector +
                        "' (expected sphere:N, cpn:N, circle, or custom:PATH)");
}

int default_t_max(const ManifoldModel& model) {
  return std::max(2 * model.dimension + 6, 12);
}

std::pair<int, int> parse_page_range(const std::string& text, int d) {
  if (text.empty()) return {d + 1, d + 1};
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int r = std::stoi(text);
      return {r, r};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ValidationError("bad page range '" + text + "' (expected R or R1..R2)");
  }
}

void print_circle(const RunConfig& config, std::ostream& out) {
  if (config.format == "json") {
    out << circle_json();
    return;
  }
  out << "H_*(LS^1) = Lambda[a] (x) Z[t,t^-1]\n";
  out << "  a exterior at (-1,0); t laurent at (0,0), invertible\n";
  for (int degree : {0, -1, 1}) {
    CircleDegreePiece piece = circle_total_degree_piece(degree);
    out << "  degree " << degree << ": " << piece.description;
    if (!piece.zero) out << "  {" << piece.basis_pattern << "}";
    out << "\n";
  }
}

void print_summary(const Page& page, std::ostream& out) {
  out << "page r=" << page.r << (page.infinity ? " (stable)" : "") << ", window s in [-"
      << page.dimension << ",0], t <= " << page.t_max << ", reliable t <= "
      << page.reliable_t_max << "\n";
  for (const auto& [key, cell] : page.cells) {
    if (cell.empty() || cell.t > page.reliable_t_max) continue;
    out << "  E[" << cell.s << "," << cell.t << "] = " << cell.group.to_string() << "  {";
    for (std::size_t i = 0; i < cell.reps.size(); ++i)
      out << (i ? ", " : "") << combo_to_string(cell.reps[i], page.presentation);
    out << "}\n";
  }
  if (page.infinity) {
    out << "total degrees (direct sum of the filtration pieces):\n";
    for (int j = -page.dimension; j + page.dimension <= page.reliable_t_max; ++j) {
      FGAbelianGroup g = assemble_total_degree(page, j);
      if (g.trivial()) continue;
      ExtensionReport report = extension_report(page, j);
      out << "  H_" << j << " ~ " << g.to_string()
          << (report.ambiguous ? "  [extension ambiguity]" : "") << "\n";
    }
  }
}

int do_compute(const RunConfig& config, std::ostream& out) {
  if (is_circle(config.model_selector)) {
    print_circle(config, out);
    return 0;
  }
  ManifoldModel model = resolve_model(config.model_selector);
  int t_max = config.t_max > 0 ? config.t_max : default_t_max(model);
  if (t_max < model.dimension + 2)
    throw ValidationError("t_max must be at least dim + 2 = " +
                          std::to_string(model.dimension + 2));

  std::pair<int, int> range;
  if (config.pages.empty() && config.format == "chart") {
    // Default chart: each page carrying a differential, then the stable page.
    std::vector<Page> pages = pages_through(model, t_max, model.dimension + 1);
    for (const Page& page : pages) {
      const DifferentialSpec* spec = spec_at(model, page.r);
      if ((spec && !spec->zero()) || page.infinity)
        out << render_chart(page, spec, "chart: " + model.name) << "\n";
    }
    if (!config.svg_path.empty()) {
      std::ofstream f(config.svg_path);
      if (!f) throw ValidationError("cannot write SVG to '" + config.svg_path + "'");
      // The stable page is the one written to the SVG artifact.
      const Page& last = pages.back();
      f << render_svg(last, spec_at(model, last.r), "chart: " + model.name);
    }
    return 0;
  }

  range = parse_page_range(config.pages, model.dimension);
  if (range.first < 2 || range.second < range.first || range.second > model.dimension + 1)
    throw ValidationError("page range must lie within 2.." +
                          std::to_string(model.dimension + 1));
  std::vector<Page> pages = pages_through(model, t_max, range.second);
  std::vector<const Page*> selected;
  for (const Page& page : pages)
    if (page.r >= range.first && page.r <= range.second) selected.push_back(&page);

  if (config.format == "json") {
    out << emit_json_pages(selected, model);
  } else if (config.format == "chart") {
    for (const Page* page : selected)
      out << render_chart(*page, spec_at(model, page->r), "chart: " + model.name) << "\n";
    if (!config.svg_path.empty()) {
      std::ofstream f(config.svg_path);
      if (!f) throw ValidationError("cannot write SVG to '" + config.svg_path + "'");
      f << render_svg(*selected.back(), spec_at(model, selected.back()->r),
                      "chart: " + model.name);
    }
  } else if (config.format == "summary") {
    for (const Page* page : selected) print_summary(*page, out);
  } else {
    throw ValidationError("unknown format '" + config.format + "'");
  }
  return 0;
}

int verify_circle(const RunConfig& config, std::ostream& out) {
  std::string expect = config.expect.empty() ? "circle" : config.expect;
  if (expect != "circle") throw ValidationError("the circle model verifies against 'circle'");
  ManifoldModel shell = custom_model_parse(expected_presentation_text("circle", 1), "circle");
  bool ok = shell.presentation.generators == circle_loop_homology().generators;
  CircleDegreePiece d0 = circle_total_degree_piece(0);
  CircleDegreePiece dm1 = circle_total_degree_piece(-1);
  CircleDegreePiece d1 = circle_total_degree_piece(1);
  ok = ok && !d0.zero && !dm1.zero && d1.zero;
  out << (ok ? "PASS" : "FAIL") << ": circle closed form Lambda[a] (x) Z[t,t^-1]\n";
  return ok ? 0 : 1;
}

int do_verify(const RunConfig& config, std::ostream& out) {
  if (is_circle(config.model_selector)) return verify_circle(config, out);
  ManifoldModel model = resolve_model(config.model_selector);
  int t_max = config.t_max > 0 ? config.t_max : default_t_max(model);
  if (t_max < model.dimension + 2)
    throw ValidationError("t_max must be at least dim + 2 = " +
                          std::to_string(model.dimension + 2));

  std::string expect = config.expect;
  if (expect.empty()) {
    auto kind = model.name.substr(0, model.name.find(':'));
    if (kind == "sphere")
      expect = "theorem2";
    else if (kind == "cpn")
      expect = "theorem3";
    else
      throw ValidationError("custom models need --expect NAME|PATH");
  }

  Page einf = infinity_page(model, t_max);
  int bound = einf.reliable_t_max - model.dimension;
  if (bound < 0) throw ValidationError("window too small to verify anything");

  PresentationCandidate cand;
  const std::vector<std::string> registered = expected_presentation_names();
  if (std::find(registered.begin(), registered.end(), expect) != registered.end() ||
      expect == "theorem2-odd-form") {
    cand = expected_presentation(expect, model, bound);
  } else {
    ManifoldModel shell = load_model_file(expect);
    if (!shell.differentials.empty())
      throw ValidationError("candidate file '" + expect + "' must not carry differentials");
    cand.name = expect;
    cand.presentation = std::move(shell.presentation);
    cand.degree_bound = bound;
  }

  MatchResult match = match_presentation(einf, cand);
  out << (match.pass ? "PASS" : "FAIL") << ": " << model.name << " vs " << cand.name << ": "
      << match.message << "\n";
  bool pass = match.pass;

  auto kind = model.name.substr(0, model.name.find(':'));
  if (kind == "cpn") {
    int n = model.dimension / 2;
    ZillerCheck ziller = ziller_crosscheck(einf, n, einf.reliable_t_max);
    out << (ziller.pass ? "PASS" : "FAIL") << ": additive reference: " << ziller.message
        << "\n";
    pass = pass && ziller.pass;
  }
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"loopss: loop-homology spectral sequence engine"};
  app.require_subcommand(1);

  RunConfig config;
  auto add_common = [&config](CLI::App* cmd) {
    cmd->add_option("--model", config.model_selector,
                    "sphere:N | cpn:N | circle | custom:PATH")
        ->required();
    cmd->add_option("--tmax", config.t_max, "row window bound (default 2*dim+6, min 12)");
  };
  CLI::App* compute = app.add_subcommand("compute", "compute and print pages");
  add_common(compute);
  compute->add_option("--format", config.format, "json | chart | summary");
  compute->add_option("--pages", config.pages, "page or range R1..R2 (default: stable page)");
  compute->add_option("--svg", config.svg_path, "write an SVG chart to this path");
  CLI::App* verify = app.add_subcommand("verify", "match the stable page against a candidate");
  add_common(verify);
  verify->add_option("--expect", config.expect,
                     "theorem2[-odd|-even] | theorem3 | circle | candidate file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(compute)) return do_compute(config, out);
    return do_verify(config, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "inconsistent input: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args) {
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace loopss
