#include "dstab/instances.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dstab/error.hpp"
#include "dstab/rng.hpp"

namespace dstab {
namespace {

using nlohmann::json;

// Accepts a candidate only if it meets every accepted disk. Disks containing
// the anchor pairwise intersect already, so they are only checked against
// the disks that miss it.
class Accumulator {
 public:
  explicit Accumulator(Point anchor) : anchor_(anchor) {}

  bool try_add(const Disk& d) {
    const Point off = d.center - anchor_;
    const bool anchored = dot(off, off) <= d.radius * d.radius;
    for (std::size_t i : free_) {
      if (!meets(d, disks_[i])) return false;
    }
    if (!anchored) {
      for (std::size_t i : anchored_) {
        if (!meets(d, disks_[i])) return false;
      }
    }
    (anchored ? anchored_ : free_).push_back(disks_.size());
    disks_.push_back(d);
    return true;
  }

  std::size_t size() const { return disks_.size(); }
  std::size_t free_count() const { return free_.size(); }
  std::vector<Disk> take() { return std::move(disks_); }

 private:
  static bool meets(const Disk& a, const Disk& b) {
    const Point d = a.center - b.center;
    const double reach = a.radius + b.radius;
    return dot(d, d) <= reach * reach;
  }

  Point anchor_;
  std::vector<Disk> disks_;
  std::vector<std::size_t> anchored_;
  std::vector<std::size_t> free_;
};

Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Cap on disks missing the anchor so that generation stays near-linear.
std::size_t free_cap(std::size_t n) {
  if (n <= 100) return n;
  return static_cast<std::size_t>(60.0 + std::cbrt(static_cast<double>(n)));
}

std::vector<Disk> gen_common_point(std::size_t n, Rng& rng, double scale) {
  const Point shared{rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
  std::vector<Disk> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double dist = scale * rng.log_uniform(0.01, 10.0);
    const Point center = shared + dist * unit(rng.angle());
    const double grow = rng.uniform() < 0.1 ? 0.0 : rng.uniform();
    // radius >= |center - shared| after rounding
    double radius = distance(center, shared) * (1.0 + grow);
    radius = std::nextafter(radius, std::numeric_limits<double>::infinity());
    out.push_back({center, radius});
  }
  return out;
}

// Candidates touch a core disk of radius `core` around the origin, mostly
// close to tangency; `radius_lo/hi` is the log-uniform radius range.
std::vector<Disk> gen_around_core(std::size_t n, Rng& rng, double core, double radius_lo,
                                  double radius_hi) {
  Accumulator acc({0.0, 0.0});
  const std::size_t cap = free_cap(n);
  std::size_t misses = 0;
  while (acc.size() < n) {
    const double r = rng.log_uniform(radius_lo, radius_hi);
    const Point dir = unit(rng.angle());
    Disk cand;
    if (misses > 200) {
      // contains the core, so it meets every accepted disk
      const double off = rng.uniform() * r;
      cand = {off * dir, r + off + core};
    } else if (acc.free_count() >= cap) {
      cand = {rng.uniform() * r * dir, r};
    } else {
      const double w = std::pow(rng.uniform(), 3.0);
      cand = {(core + r) * (1.0 - w) * dir, r};
    }
    if (acc.try_add(cand)) {
      misses = 0;
    } else {
      ++misses;
    }
  }
  return acc.take();
}

// Extra disks avoiding c*: radius and delta ranges in frame units.
struct ExtraFamily {
  double r_lo, r_hi;
  double delta_lo, delta_hi;
};

// How an instance is built around the unit d* at the origin. Extra disks
// come from `families` with probability `share`, otherwise they contain c*
// and leave D- alone.
struct FrameRegime {
  double basis_lo, basis_hi;
  std::vector<ExtraFamily> families;
  double share;
};

FrameRegime regime_for(CaseTag tag, Rng& rng) {
  switch (tag) {
    case CaseTag::FourRminGe4:
      return {4.0, 200.0, {{4.0, 60.0, 0.0, 1.0}}, 0.5};
    case CaseTag::FourRminLe2A17:
    case CaseTag::FourRminLe2YPos:
      return {1.0, 200.0, {{0.05, 2.0, 0.0, 1.0}}, 0.7};
    case CaseTag::FourRminLe2YNeg:
      // needs a nearly flat pair of basis disks and a key disk of radius
      // close to 2 hugging c*
      return {50.0, 20000.0, {{1.6, 2.0, 0.0, 0.3}}, 0.7};
    case CaseTag::FourMidSub1:
      return {2.05, 200.0, {{2.05, 5.0, 0.5, 1.0}, {2.05, 30.0, 0.0, 1.0}}, 0.5};
    case CaseTag::FourMidSub2:
      return {20.5, 400.0, {{2.05, 3.95, 0.0, 0.49}, {5.05, 20.0, 0.5, 1.0}}, 0.7};
    case CaseTag::FourMidSub3:
      return {20.5, 400.0, {{2.05, 3.95, 0.0, 0.49}, {2.05, 5.0, 0.11, 0.49}}, 0.7};
    case CaseTag::FourMidSub4:
      return {20.5, 400.0, {{2.05, 3.95, 0.0, 0.1}, {5.05, 20.0, 0.0, 0.49}}, 0.7};
    case CaseTag::Helly:
    case CaseTag::Five:
      break;
  }
  // any non-Helly shape
  const std::array<CaseTag, 4> pick{CaseTag::FourRminGe4, CaseTag::FourRminLe2A17,
                                    CaseTag::FourMidSub1, CaseTag::FourMidSub3};
  return regime_for(pick[rng.below(pick.size())], rng);
}

// Three disks tangent to d* with the origin inside their tangency triangle,
// plus extras meeting d*. Returns nothing when the basis disks miss each
// other.
std::optional<std::vector<Disk>> gen_frame_instance(std::size_t n, Rng& rng,
                                                    const FrameRegime& regime) {
  std::array<double, 3> angles{rng.angle(), rng.angle(), rng.angle()};
  std::sort(angles.begin(), angles.end());
  const double two_pi = 2.0 * std::numbers::pi;
  const std::array<double, 3> arcs{angles[1] - angles[0], angles[2] - angles[1],
                                   two_pi - (angles[2] - angles[0])};
  for (double arc : arcs) {
    if (arc >= std::numbers::pi - 1e-6 || arc <= 1e-6) return std::nullopt;
  }

  Accumulator acc({0.0, 0.0});
  for (double a : angles) {
    const double r = rng.log_uniform(regime.basis_lo, regime.basis_hi);
    if (!acc.try_add({(1.0 + r) * unit(a), r})) return std::nullopt;
  }

  std::size_t misses = 0;
  while (acc.size() < n) {
    Disk cand;
    const Point dir = unit(rng.angle());
    if (misses > 200) {
      const double r = rng.log_uniform(1.0, 50.0);
      const double off = rng.uniform() * r;
      cand = {off * dir, r + off + 1.0};
    } else if (rng.uniform() < regime.share) {
      const ExtraFamily& f = regime.families[rng.below(regime.families.size())];
      const double r = rng.uniform(f.r_lo, f.r_hi);
      cand = {(r + rng.uniform(f.delta_lo, f.delta_hi)) * dir, r};
    } else {
      const double r = rng.log_uniform(0.5, 60.0);
      cand = {rng.uniform() * r * dir, r};
    }
    if (acc.try_add(cand)) {
      misses = 0;
    } else {
      ++misses;
    }
  }
  return acc.take();
}

Similarity random_placement(Rng& rng, double scale) {
  Similarity t;
  t.rotation = rng.uniform(-std::numbers::pi, std::numbers::pi);
  t.scale = scale * rng.log_uniform(0.1, 10.0);
  t.translation = {rng.uniform(-10.0, 10.0) * scale, rng.uniform(-10.0, 10.0) * scale};
  t.reflect = rng.uniform() < 0.5;
  return t;
}

std::vector<Disk> gen_targeted(const GenProfile& profile) {
  const CaseTag target = *profile.target;
  Rng rng(Rng::mix(profile.seed, 0x7461726765746564ULL));
  if (target == CaseTag::Helly) return gen_common_point(profile.n, rng, profile.scale);
  if (profile.n < 3) {
    throw Error(ErrorKind::GenerationExhausted,
                "targeted generation of a non-Helly branch needs at least three disks");
  }
  for (std::size_t attempt = 0; attempt < kTargetedAttempts; ++attempt) {
    const FrameRegime regime = regime_for(target, rng);
    auto frame = gen_frame_instance(profile.n, rng, regime);
    if (!frame) continue;
    const Similarity place = random_placement(rng, profile.scale);
    std::vector<Disk> disks;
    disks.reserve(frame->size());
    for (const Disk& d : *frame) disks.push_back(apply(place, d));
    rng.shuffle(disks.begin(), disks.end());
    const StabResult result =
        target == CaseTag::Five ? stab_five(disks, {}, profile.seed) : stab_four(disks, {}, profile.seed);
    if (result.case_tag == target) return disks;
  }
  throw Error(ErrorKind::GenerationExhausted,
              "no instance reached branch " + std::string(to_string(target)));
}

// Parses one whitespace-separated double; returns false on junk.
bool parse_real(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

DiskFile parse_structured(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("structured disk file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("disks") || !doc["disks"].is_array()) {
    throw ParseError(0, "structured disk file needs a \"disks\" array");
  }
  DiskFile out;
  std::size_t k = 0;
  for (const json& item : doc["disks"]) {
    ++k;
    auto field = [&](const char* key) {
      if (!item.is_object() || !item.contains(key) || !item[key].is_number()) {
        throw ParseError(0, "disk " + std::to_string(k) + ": missing numeric \"" + key + "\"");
      }
      return item[key].get<double>();
    };
    const Disk d{{field("cx"), field("cy")}, field("r")};
    if (!std::isfinite(d.center.x) || !std::isfinite(d.center.y) || !std::isfinite(d.radius)) {
      throw ParseError(0, "disk " + std::to_string(k) + ": non-finite value");
    }
    if (d.radius < 0.0) throw ParseError(0, "disk " + std::to_string(k) + ": negative radius");
    out.disks.push_back(d);
  }
  if (doc.contains("meta") && doc["meta"].is_object()) {
    const json& meta = doc["meta"];
    if (meta.contains("seed") && meta["seed"].is_number_unsigned()) {
      out.meta.seed = meta["seed"].get<std::uint64_t>();
    }
    if (meta.contains("profile") && meta["profile"].is_string()) {
      out.meta.profile = meta["profile"].get<std::string>();
    }
  }
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string profile_label(const GenProfile& profile) {
  switch (profile.name) {
    case ProfileName::CommonPoint: return "COMMON_POINT";
    case ProfileName::TangentCore: return "TANGENT_CORE";
    case ProfileName::MixedRadii: return "MIXED_RADII";
    case ProfileName::CaseTargeted:
      return "CASE_TARGETED(" +
             std::string(profile.target ? to_string(*profile.target) : "?") + ")";
  }
  return "UNKNOWN";
}

std::optional<GenProfile> parse_profile_label(std::string_view label) {
  GenProfile p;
  if (label == "COMMON_POINT") {
    p.name = ProfileName::CommonPoint;
  } else if (label == "TANGENT_CORE") {
    p.name = ProfileName::TangentCore;
  } else if (label == "MIXED_RADII") {
    p.name = ProfileName::MixedRadii;
  } else if (label.starts_with("CASE_TARGETED(") && label.ends_with(")")) {
    label.remove_prefix(14);
    label.remove_suffix(1);
    const auto tag = case_tag_from_string(label);
    if (!tag) return std::nullopt;
    p.name = ProfileName::CaseTargeted;
    p.target = tag;
  } else {
    return std::nullopt;
  }
  return p;
}

std::vector<Disk> gen_instance(const GenProfile& profile) {
  if (profile.n < 1) throw std::invalid_argument("profile needs n >= 1");
  if (!(profile.scale > 0.0)) throw std::invalid_argument("profile needs scale > 0");
  switch (profile.name) {
    case ProfileName::CommonPoint: {
      Rng rng(Rng::mix(profile.seed, 1));
      return gen_common_point(profile.n, rng, profile.scale);
    }
    case ProfileName::TangentCore: {
      Rng rng(Rng::mix(profile.seed, 2));
      const double core = rng.uniform() * profile.scale;
      return gen_around_core(profile.n, rng, core, 0.05 * profile.scale, 30.0 * profile.scale);
    }
    case ProfileName::MixedRadii: {
      Rng rng(Rng::mix(profile.seed, 3));
      return gen_around_core(profile.n, rng, 2.0 * profile.scale, 0.5 * profile.scale,
                             50.0 * profile.scale);
    }
    case ProfileName::CaseTargeted:
      if (!profile.target) throw std::invalid_argument("CASE_TARGETED needs a target tag");
      return gen_targeted(profile);
  }
  throw std::invalid_argument("unknown profile");
}

DiskFile parse_disks(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_structured(text);

  DiskFile out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos || line[start] == '#') continue;

    std::array<double, 3> values{};
    std::size_t count = 0;
    std::size_t pos = start;
    while (pos < line.size()) {
      const auto tok_end = line.find_first_of(" \t\r", pos);
      const auto token = line.substr(pos, tok_end - pos);
      if (count == 3) throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected 3 fields");
      if (!parse_real(token, values[count])) {
        throw ParseError(line_no, "line " + std::to_string(line_no) + ": bad number '" +
                                      std::string(token) + "'");
      }
      if (!std::isfinite(values[count])) {
        throw ParseError(line_no, "line " + std::to_string(line_no) + ": non-finite value");
      }
      ++count;
      if (tok_end == std::string_view::npos) break;
      pos = line.find_first_not_of(" \t\r", tok_end);
      if (pos == std::string_view::npos) break;
    }
    if (count != 3) throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected 3 fields");
    if (values[2] < 0.0) throw ParseError(line_no, "line " + std::to_string(line_no) + ": negative radius");
    out.disks.push_back({{values[0], values[1]}, values[2]});
  }
  return out;
}

DiskFile read_disk_file(const std::filesystem::path& path) { return parse_disks(slurp(path)); }

std::vector<Disk> read_disks(const std::filesystem::path& path) {
  return read_disk_file(path).disks;
}

std::string format_disks(std::span<const Disk> disks) {
  std::string out;
  out.reserve(disks.size() * 64);
  for (const Disk& d : disks) {
    out += format_real(d.center.x);
    out += ' ';
    out += format_real(d.center.y);
    out += ' ';
    out += format_real(d.radius);
    out += '\n';
  }
  return out;
}

std::string format_disks_structured(std::span<const Disk> disks, const DiskFileMeta& meta) {
  json doc;
  json arr = json::array();
  for (const Disk& d : disks) arr.push_back({{"cx", d.center.x}, {"cy", d.center.y}, {"r", d.radius}});
  doc["disks"] = std::move(arr);
  json m = json::object();
  if (meta.seed) m["seed"] = *meta.seed;
  if (meta.profile) m["profile"] = *meta.profile;
  doc["meta"] = std::move(m);
  return doc.dump() + "\n";
}

void write_disks(const std::filesystem::path& path, std::span<const Disk> disks) {
  spill(path, format_disks(disks));
}

void write_disks_structured(const std::filesystem::path& path, std::span<const Disk> disks,
                            const DiskFileMeta& meta) {
  spill(path, format_disks_structured(disks, meta));
}

}  // namespace dstab
