// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "dstab/error.hpp"
#include "dstab/instances.hpp"
#include "dstab/stabbing.hpp"
#include "dstab/verifier.hpp"
#include "oracle.hpp"

using namespace dstab;

namespace {

constexpr ProfileName kCorpusProfiles[] = {ProfileName::CommonPoint, ProfileName::TangentCore,
                                           ProfileName::MixedRadii};
constexpr std::size_t kCorpusSizes[] = {3, 10, 100, 10'000};
constexpr std::uint64_t kCorpusSeeds = 250;

struct CorpusRun {
  std::size_t instances = 0;
  std::size_t four_failures = 0;
  std::size_t five_failures = 0;
  std::size_t five_frame_mismatches = 0;
  std::size_t non_helly_five = 0;
  std::map<CaseTag, std::size_t> tags;
  std::string first_failure;
};

// Receives the structured output of every instance in order.
using Sink = std::function<void(const std::string&)>;

bool five_frame_exact(const StabResult& r) {
  const auto expected = frame_points_for(CaseTag::Five);
  if (r.frame_points.size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(r.frame_points[i] == expected[i])) return false;
  }
  return true;
}

CorpusRun run_corpus(const Sink& sink) {
  CorpusRun run;
  for (ProfileName name : kCorpusProfiles) {
    for (std::size_t n : kCorpusSizes) {
      for (std::uint64_t seed = 0; seed < kCorpusSeeds; ++seed) {
        const GenProfile profile{name, n, seed, 1.0, std::nullopt};
        const auto disks = gen_instance(profile);
        ++run.instances;
        std::string out = format_disks_structured(disks, {seed, profile_label(profile)});

        const StabResult four = stab_four(disks, {}, seed);
        ++run.tags[four.case_tag];
        out += cli::result_json(four, n, std::nullopt);
        if (four.points.size() > 4 || !verify_stabbing(disks, four).ok) {
          ++run.four_failures;
          if (run.first_failure.empty()) run.first_failure = "four " + profile_label(profile) +
                                                             " n=" + std::to_string(n) +
                                                             " seed=" + std::to_string(seed);
        }

        const StabResult five = stab_five(disks, {}, seed);
        out += cli::result_json(five, n, std::nullopt);
        if (five.points.size() > 5 || !verify_stabbing(disks, five).ok) {
          ++run.five_failures;
          if (run.first_failure.empty()) run.first_failure = "five " + profile_label(profile) +
                                                             " n=" + std::to_string(n) +
                                                             " seed=" + std::to_string(seed);
        }
        if (five.case_tag != CaseTag::Helly) {
          ++run.non_helly_five;
          if (!five_frame_exact(five)) ++run.five_frame_mismatches;
        }
        sink(out);
      }
    }
  }
  return run;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("CRITERION %d %s: %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string tag_summary(const std::map<CaseTag, std::size_t>& tags) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [tag, count] : tags) {
    s << (first ? "" : " ") << to_string(tag) << '=' << count;
    first = false;
  }
  return s.str();
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  std::string structured;
  const CorpusRun first = run_corpus([&](const std::string& s) { structured += s; });
  const double corpus_seconds = seconds_since(t0);
  {
    std::ostringstream s;
    s << first.instances << " instances, " << first.four_failures << " failures, "
      << corpus_seconds << " s (with stab_five); tags " << tag_summary(first.tags);
    if (!first.first_failure.empty()) s << "; first failure " << first.first_failure;
    report(1, first.instances >= 1000 && first.four_failures == 0, s.str());
  }
  {
    std::ostringstream s;
    s << first.instances << " instances, " << first.five_failures << " failures, "
      << first.non_helly_five << " non-Helly runs, " << first.five_frame_mismatches
      << " frame mismatches";
    report(2, first.five_failures == 0 && first.five_frame_mismatches == 0, s.str());
  }

  {
    t0 = Clock::now();
    std::size_t verified = 0;
    std::ostringstream missing;
    for (CaseTag tag : kAllCaseTags) {
      const GenProfile profile{ProfileName::CaseTargeted, 10, 0, 1.0, tag};
      bool ok = false;
      try {
        const auto disks = gen_instance(profile);
        const StabResult r =
            tag == CaseTag::Five ? stab_five(disks) : stab_four(disks);
        const StabResult four = stab_four(disks);
        ok = r.case_tag == tag && verify_pairwise(disks).ok && verify_stabbing(disks, r).ok &&
             four.points.size() <= 4 && verify_stabbing(disks, four).ok;
      } catch (const Error& e) {
        missing << ' ' << to_string(tag) << " (" << e.what() << ')';
      }
      if (ok) {
        ++verified;
      } else if (missing.str().find(std::string(to_string(tag))) == std::string::npos) {
        missing << ' ' << to_string(tag);
      }
    }
    std::ostringstream s;
    s << verified << '/' << kAllCaseTags.size() << " case tags verified, " << seconds_since(t0)
      << " s";
    if (!missing.str().empty()) s << "; missing" << missing.str();
    report(3, verified == kAllCaseTags.size(), s.str());
  }

  {
    t0 = Clock::now();
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const GenProfile profile{kCorpusProfiles[seed % 3], 2 + seed % 49, 1000 + seed, 1.0,
                               std::nullopt};
      const auto disks = gen_instance(profile);
      const MinStabResult ms = smallest_intersecting_disk(disks, {}, seed);
      const double value = evaluate_objective(ms.dstar.center, disks);
      worst = std::max(worst, std::abs(value - oracle::grid_oracle(disks).value));
    }
    std::ostringstream s;
    s << "100 instances, max |f(c*) - oracle| = " << worst << ", " << seconds_since(t0) << " s";
    report(4, worst <= 1e-6, s.str());
  }

  {
    t0 = Clock::now();
    constexpr std::uint64_t kSamples = 100'000;
    std::ostringstream s;
    std::size_t total_bad = 0;
    for (ObsId id : kAllObsIds) {
      std::size_t bad = 0;
      for (std::uint64_t seed = 0; seed < kSamples; ++seed) {
        try {
          if (!check_observation(sample_observation(id, seed))) ++bad;
        } catch (const Error&) {
          ++bad;
        }
      }
      s << to_string(id) << '=' << bad << ' ';
      total_bad += bad;
    }
    s << "counterexamples over " << kSamples << " samples each, " << seconds_since(t0) << " s";
    report(5, total_bad == 0, s.str());
  }

  {
    const auto table = proof_constant_table();
    std::size_t ok = 0;
    std::ostringstream bad;
    for (const ConstantCheck& c : table) {
      if (c.ok) {
        ++ok;
      } else {
        bad << ' ' << c.name;
      }
    }
    std::ostringstream s;
    s << ok << '/' << table.size() << " constants match";
    if (!bad.str().empty()) s << "; mismatched" << bad.str();
    report(6, ok == table.size() && check_proof_constants().ok, s.str());
  }

  {
    const std::size_t sizes[] = {1'000, 10'000, 100'000, 1'000'000};
    const cli::BenchResult bench = cli::run_bench(sizes, 0, 3);
    const double big = bench.rows.back().seconds;
    std::ostringstream s;
    s << "exponent " << bench.exponent << ", n=10^6 in " << big << " s";
    report(7, bench.exponent <= 1.25 && big < 10.0, s.str());
  }

  {
    std::size_t offset = 0;
    bool same = true;
    run_corpus([&](const std::string& chunk) {
      same = same && structured.compare(offset, chunk.size(), chunk) == 0;
      offset += chunk.size();
    });
    same = same && offset == structured.size();
    std::ostringstream s;
    s << structured.size() << " bytes per run, " << (same ? "identical" : "different");
    report(8, same, s.str());
  }

  return failures == 0 ? 0 : 1;
}
