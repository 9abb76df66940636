#include <chrono>
#include <cmath>

#include "cli.hpp"
#include "dstab/instances.hpp"

namespace dstab::cli {

double fit_exponent(std::span<const BenchRow> rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double k = 0;
  for (const BenchRow& r : rows) {
    if (!(r.seconds > 0.0)) continue;
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(r.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    k += 1;
  }
  if (k < 2) return 0.0;
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

BenchResult run_bench(std::span<const std::size_t> sizes, std::uint64_t seed, int repeats) {
  BenchResult out;
  for (std::size_t n : sizes) {
    GenProfile profile;
    profile.name = ProfileName::TangentCore;
    profile.n = n;
    profile.seed = seed;
    const auto disks = gen_instance(profile);
    BenchRow row;
    row.n = n;
    row.seconds = std::numeric_limits<double>::infinity();
    for (int rep = 0; rep < std::max(1, repeats); ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const StabResult r = stab_four(disks, {}, seed);
      const auto t1 = std::chrono::steady_clock::now();
      row.seconds = std::min(row.seconds, std::chrono::duration<double>(t1 - t0).count());
      row.tag = r.case_tag;
    }
    out.rows.push_back(row);
  }
  out.exponent = fit_exponent(out.rows);
  return out;
}

}  // namespace dstab::cli
