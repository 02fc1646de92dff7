#pragma once

// STV1 volume container:
//   "STV1" | u32 nx | u32 ny | u32 nt | u32 dtype (0 = float32, 1 = float64) | samples
// All integers little-endian, samples x-fastest, then y, then t. An optional
// JSON sidecar with the same basename and a ".json" extension carries
// provenance metadata.

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcm/volume.hpp"

namespace gcm::cli {

enum class StvType : std::uint32_t { float32 = 0, float64 = 1 };

inline constexpr std::size_t kStvHeaderBytes = 20;

/// File system or format failure while reading or writing a file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StvData {
  GridDims dims;
  StvType type = StvType::float32;
  std::vector<double> samples;
};

std::size_t stv_sample_bytes(StvType type);

/// Any dims with positive sizes are accepted (kernel dumps use nt = 1).
void write_stv(const std::filesystem::path& path, GridDims dims, std::span<const double> samples,
               StvType type);
StvData read_stv(const std::filesystem::path& path);

/// Reads a file and checks it is a valid image sequence.
SequenceVolume read_sequence(const std::filesystem::path& path);

std::filesystem::path sidecar_path(const std::filesystem::path& path);
void write_sidecar(const std::filesystem::path& path, const nlohmann::json& meta);
nlohmann::json read_sidecar(const std::filesystem::path& path);

}  // namespace gcm::cli
