#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dstab/geom.hpp"
#include "dstab/stabbing.hpp"

namespace dstab::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kSolverError = 2, kVerifyFailed = 3 };

/// Runs one command line; never throws. Output goes to `out`, diagnostics
/// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// {"points":[{"x":..,"y":..}],"case_tag":..,"n":..,"elapsed_ms":..};
/// elapsed_ms is omitted when not given.
std::string result_json(const StabResult& result, std::size_t n,
                        std::optional<double> elapsed_ms);
std::string result_text(const StabResult& result, std::size_t n,
                        std::optional<double> elapsed_ms);

struct RenderOptions {
  std::optional<Disk> dstar;
  /// Tangent lines drawn across the view.
  std::vector<Line> lines;
};

/// Standalone SVG 1.1 document. The y axis points up.
std::string render_svg(std::span<const Disk> disks, std::span<const Point> points,
                       const RenderOptions& options = {});

struct BenchRow {
  std::size_t n = 0;
  double seconds = 0.0;
  CaseTag tag = CaseTag::Helly;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  /// Least-squares slope of log(seconds) against log(n).
  double exponent = 0.0;
};

/// Times stab_four on TANGENT_CORE instances; each size keeps the best of
/// `repeats` runs.
BenchResult run_bench(std::span<const std::size_t> sizes, std::uint64_t seed, int repeats = 3);

double fit_exponent(std::span<const BenchRow> rows);

/// "x y" per line, '#' comments allowed. Throws ParseError.
std::vector<Point> parse_points(const std::string& text);

}  // namespace dstab::cli
