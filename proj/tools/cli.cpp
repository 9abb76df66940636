#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dstab/error.hpp"
#include "dstab/framing.hpp"
#include "dstab/instances.hpp"
#include "dstab/verifier.hpp"

namespace dstab::cli {
namespace {

using nlohmann::json;

struct Common {
  double eps_abs = Tolerance{}.eps_abs;
  double eps_rel = Tolerance{}.eps_rel;
  std::uint64_t seed = 0;
  std::string format = "text";

  Tolerance tol() const { return {eps_abs, eps_rel}; }
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorKind::Io, "cannot write " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StabResult solve(int points, std::span<const Disk> disks, const Common& c) {
  return points == 5 ? stab_five(disks, c.tol(), c.seed) : stab_four(disks, c.tol(), c.seed);
}

std::string report_text(const VerifyReport& report) {
  std::ostringstream s;
  s << (report.ok ? "ok" : "FAILED") << '\n';
  for (const auto& [name, count] : report.checked) s << "checked " << name << ' ' << count << '\n';
  for (const Violation& v : report.violations) {
    s << "violation " << to_string(v.kind);
    for (std::size_t i : v.indices) s << ' ' << i;
    s << " magnitude " << format_real(v.magnitude);
    if (!v.note.empty()) s << " (" << v.note << ')';
    s << '\n';
  }
  return s.str();
}

json report_json(const VerifyReport& report) {
  json j;
  j["ok"] = report.ok;
  j["checked"] = report.checked;
  json vs = json::array();
  for (const Violation& v : report.violations) {
    vs.push_back({{"kind", to_string(v.kind)}, {"indices", v.indices}, {"magnitude", v.magnitude},
                  {"note", v.note}});
  }
  j["violations"] = std::move(vs);
  return j;
}

}  // namespace

std::string result_json(const StabResult& result, std::size_t n, std::optional<double> elapsed_ms) {
  json j;
  json pts = json::array();
  for (Point p : result.points) pts.push_back({{"x", p.x}, {"y", p.y}});
  j["points"] = std::move(pts);
  j["case_tag"] = std::string(to_string(result.case_tag));
  j["n"] = n;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j.dump() + "\n";
}

std::string result_text(const StabResult& result, std::size_t n, std::optional<double> elapsed_ms) {
  std::ostringstream s;
  s << "case_tag " << to_string(result.case_tag) << '\n';
  s << "n " << n << '\n';
  if (elapsed_ms) s << "elapsed_ms " << format_real(*elapsed_ms) << '\n';
  for (Point p : result.points) s << format_real(p.x) << ' ' << format_real(p.y) << '\n';
  return s.str();
}

std::vector<Point> parse_points(const std::string& text) {
  std::vector<Point> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    // reuse the disk parser with a zero radius
    try {
      const DiskFile f = parse_disks(line + " 0\n");
      out.push_back(f.disks.at(0).center);
    } catch (const ParseError&) {
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected \"x y\"");
    }
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabbing pairwise intersecting disks with four or five points", "dstab"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--eps-abs", common.eps_abs, "absolute tolerance")->check(CLI::PositiveNumber);
  app.add_option("--eps-rel", common.eps_rel, "relative tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", common.seed, "seed for randomized steps");
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string input, output;

  auto* stab = app.add_subcommand("stab", "compute a stabbing set");
  int points = 4;
  bool self_verify = false, no_timing = false;
  stab->add_option("input", input, "disk file")->required();
  stab->add_option("--points", points, "4 or 5")->check(CLI::IsMember({4, 5}));
  stab->add_flag("--self-verify", self_verify, "check the result before exiting");
  stab->add_flag("--no-timing", no_timing, "leave out elapsed_ms");
  stab->add_option("-o,--output", output, "output file");

  auto* verify = app.add_subcommand("verify", "check a disk file and optionally a point set");
  std::string points_file;
  int solve_points = 0;
  std::size_t max_pairs = 0;
  std::size_t trials = 64;
  verify->add_option("input", input, "disk file")->required();
  verify->add_option("--points-file", points_file, "points to check as a stabbing set");
  verify->add_option("--solve", solve_points, "run the 4- or 5-point algorithm and check it")
      ->check(CLI::IsMember({4, 5}));
  verify->add_option("--max-pairs", max_pairs, "sample this many pairs instead of all (0: all)");
  verify->add_option("--minimality-trials", trials, "shrunk-disk trials when solving");

  auto* gen = app.add_subcommand("gen", "generate a pairwise intersecting instance");
  std::string profile_name = "TANGENT_CORE";
  std::size_t n = 10;
  double scale = 1.0;
  gen->add_option("--profile", profile_name,
                  "COMMON_POINT, TANGENT_CORE, MIXED_RADII or CASE_TARGETED(<TAG>)");
  gen->add_option("-n,--n", n, "number of disks")->check(CLI::PositiveNumber);
  gen->add_option("--scale", scale, "length scale")->check(CLI::PositiveNumber);
  gen->add_option("-o,--output", output, "output file");

  auto* render = app.add_subcommand("render", "draw disks and points as SVG");
  int render_points = 0;
  bool draw_dstar = false, tangents = false;
  render->add_option("input", input, "disk file")->required();
  render->add_option("--points-file", points_file, "points to overlay");
  render->add_option("--stab", render_points, "overlay the 4- or 5-point solution")
      ->check(CLI::IsMember({4, 5}));
  render->add_flag("--dstar", draw_dstar, "draw d* dashed");
  render->add_flag("--tangents", tangents, "draw the three tangent lines of d*");
  render->add_option("-o,--output", output, "output file");

  auto* bench = app.add_subcommand("bench", "time stab_four over growing n");
  std::vector<std::size_t> sizes{1000, 10000, 100000, 1000000};
  int repeats = 3;
  bench->add_option("--sizes", sizes, "instance sizes")->delimiter(',');
  bench->add_option("--repeats", repeats, "runs per size (best is kept)");

  auto* constants = app.add_subcommand("check-constants", "re-solve the proof constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const bool structured = common.format == "structured";
  try {
    if (*stab) {
      const auto disks = read_disks(input);
      const auto t0 = std::chrono::steady_clock::now();
      const StabResult result = solve(points, disks, common);
      const auto t1 = std::chrono::steady_clock::now();
      std::optional<double> ms;
      if (!no_timing) ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      emit(output, structured ? result_json(result, disks.size(), ms)
                              : result_text(result, disks.size(), ms),
           out);
      if (self_verify) {
        const VerifyReport report = verify_stabbing(disks, result, common.tol());
        if (!report.ok) {
          err << report_text(report);
          return kVerifyFailed;
        }
      }
      return kOk;
    }
    if (*verify) {
      const auto disks = read_disks(input);
      VerifyReport report = verify_pairwise(
          disks, common.tol(), max_pairs > 0 ? std::optional(max_pairs) : std::nullopt, common.seed);
      if (!points_file.empty()) {
        const auto pts = parse_points(read_text(points_file));
        report.merge(verify_stabbing(disks, pts, common.tol()));
      }
      if (solve_points != 0) {
        const StabResult result = solve(solve_points, disks, common);
        report.merge(verify_stabbing(disks, result, common.tol()));
        report.merge(verify_minimality(disks, result.min_stab, trials, common.seed, common.tol()));
      }
      out << (structured ? report_json(report).dump() + "\n" : report_text(report));
      return report.ok ? kOk : kVerifyFailed;
    }
    if (*gen) {
      auto profile = parse_profile_label(profile_name);
      if (!profile) {
        err << "unknown profile " << profile_name << '\n';
        return kInputError;
      }
      profile->n = n;
      profile->seed = common.seed;
      profile->scale = scale;
      const auto disks = gen_instance(*profile);
      const std::string label = profile_label(*profile);
      emit(output,
           structured ? format_disks_structured(disks, {common.seed, label})
                      : "# " + label + " n=" + std::to_string(n) +
                            " seed=" + std::to_string(common.seed) + "\n" + format_disks(disks),
           out);
      return kOk;
    }
    if (*render) {
      const auto disks = read_disks(input);
      std::vector<Point> pts;
      if (!points_file.empty()) pts = parse_points(read_text(points_file));
      RenderOptions opts;
      if ((render_points != 0 || draw_dstar || tangents) && !disks.empty()) {
        const StabResult result = solve(render_points == 5 ? 5 : 4, disks, common);
        if (render_points != 0) pts.insert(pts.end(), result.points.begin(), result.points.end());
        if (draw_dstar) opts.dstar = result.min_stab.dstar;
        if (tangents && result.case_tag != CaseTag::Helly) {
          const BaseFrame bf = build_base_frame(disks, result.min_stab);
          const Similarity back = invert(bf.to_frame);
          for (const Line& l : bf.tangent_lines) opts.lines.push_back(apply(back, l));
        }
      }
      emit(output, render_svg(disks, pts, opts), out);
      return kOk;
    }
    if (*bench) {
      const BenchResult result = run_bench(sizes, common.seed, repeats);
      if (structured) {
        json rows = json::array();
        for (const BenchRow& r : result.rows) {
          rows.push_back({{"n", r.n}, {"seconds", r.seconds}, {"case_tag", std::string(to_string(r.tag))}});
        }
        out << json{{"rows", rows}, {"exponent", result.exponent}}.dump() << '\n';
      } else {
        for (const BenchRow& r : result.rows) {
          out << r.n << ' ' << format_real(r.seconds * 1e3) << " ms " << to_string(r.tag) << '\n';
        }
        out << "exponent " << format_real(result.exponent) << '\n';
      }
      return kOk;
    }
    if (*constants) {
      bool all = true;
      json rows = json::array();
      std::ostringstream text;
      for (const ConstantCheck& c : proof_constant_table()) {
        all = all && c.ok;
        rows.push_back({{"name", c.name}, {"solved", c.solved}, {"expected", c.expected},
                        {"relation", c.relation}, {"ok", c.ok}});
        text << (c.ok ? "ok   " : "FAIL ") << c.name << ' ' << format_real(c.solved) << ' '
             << c.relation << ' ' << format_real(c.expected) << '\n';
      }
      out << (structured ? json{{"ok", all}, {"constants", rows}}.dump() + "\n" : text.str());
      return all ? kOk : kVerifyFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::Io || e.kind() == ErrorKind::Parse ? kInputError : kSolverError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSolverError;
  }
  return kOk;
}

}  // namespace dstab::cli
