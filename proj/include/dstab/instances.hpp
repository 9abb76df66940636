#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dstab/geom.hpp"
#include "dstab/stabbing.hpp"

namespace dstab {

enum class ProfileName { CommonPoint, TangentCore, MixedRadii, CaseTargeted };

struct GenProfile {
  ProfileName name = ProfileName::TangentCore;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  double scale = 1.0;
  /// Required for CaseTargeted.
  std::optional<CaseTag> target;
};

/// "COMMON_POINT", "TANGENT_CORE", "MIXED_RADII" or "CASE_TARGETED(<TAG>)".
std::string profile_label(const GenProfile& profile);
/// Inverse of profile_label for the name part; n/seed/scale stay default.
std::optional<GenProfile> parse_profile_label(std::string_view label);

/// Pairwise-intersecting disks, deterministic in (name, n, seed, scale,
/// target). Throws GenerationExhausted when a targeted stream runs dry.
std::vector<Disk> gen_instance(const GenProfile& profile);

inline constexpr std::size_t kTargetedAttempts = 1'000'000;

struct DiskFileMeta {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> profile;
};

struct DiskFile {
  std::vector<Disk> disks;
  DiskFileMeta meta;
};

/// One disk per line, "cx cy r"; '#' comment lines and blank lines skipped.
/// Input starting with '{' is read as the structured form. Throws ParseError.
DiskFile parse_disks(std::string_view text);
std::vector<Disk> read_disks(const std::filesystem::path& path);
DiskFile read_disk_file(const std::filesystem::path& path);

/// Text form, 17 significant digits.
std::string format_disks(std::span<const Disk> disks);
/// {"disks":[{"cx":..,"cy":..,"r":..}],"meta":{"seed":..,"profile":..}}
std::string format_disks_structured(std::span<const Disk> disks, const DiskFileMeta& meta = {});

void write_disks(const std::filesystem::path& path, std::span<const Disk> disks);
void write_disks_structured(const std::filesystem::path& path, std::span<const Disk> disks,
                            const DiskFileMeta& meta = {});

/// "%.17g"
std::string format_real(double value);

}  // namespace dstab
