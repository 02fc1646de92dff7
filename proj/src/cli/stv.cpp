#include "gcm/cli/stv.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

namespace gcm::cli {
namespace {

constexpr std::array<char, 4> kMagic{'S', 'T', 'V', '1'};

template <class U>
void put_le(std::vector<char>& out, U value) {
  for (std::size_t i = 0; i < sizeof(U); ++i)
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xFFu));
}

template <class U>
U get_le(const char* p) {
  U value = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i)
    value |= static_cast<U>(static_cast<unsigned char>(p[i])) << (8 * i);
  return value;
}

std::uint32_t checked_u32(std::size_t v) {
  if (v == 0 || v > 0xFFFFFFFFu) throw std::invalid_argument("STV dimension out of range");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::size_t stv_sample_bytes(StvType type) { return type == StvType::float32 ? 4 : 8; }

void write_stv(const std::filesystem::path& path, GridDims dims, std::span<const double> samples,
               StvType type) {
  if (samples.size() != dims.size()) throw std::invalid_argument("sample count does not match dims");
  std::vector<char> bytes(kMagic.begin(), kMagic.end());
  bytes.reserve(kStvHeaderBytes + samples.size() * stv_sample_bytes(type));
  put_le(bytes, checked_u32(dims.nx));
  put_le(bytes, checked_u32(dims.ny));
  put_le(bytes, checked_u32(dims.nt));
  put_le(bytes, static_cast<std::uint32_t>(type));
  for (double v : samples) {
    if (type == StvType::float32)
      put_le(bytes, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
    else
      put_le(bytes, std::bit_cast<std::uint64_t>(v));
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

StvData read_stv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < kStvHeaderBytes || std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0)
    throw IoError(path.string() + ": not an STV1 file");
  StvData data;
  data.dims = {get_le<std::uint32_t>(bytes.data() + 4), get_le<std::uint32_t>(bytes.data() + 8),
               get_le<std::uint32_t>(bytes.data() + 12)};
  const auto tag = get_le<std::uint32_t>(bytes.data() + 16);
  if (tag > 1) throw IoError(path.string() + ": unknown dtype tag " + std::to_string(tag));
  data.type = static_cast<StvType>(tag);
  if (data.dims.nx == 0 || data.dims.ny == 0 || data.dims.nt == 0)
    throw IoError(path.string() + ": zero dimension");
  const std::size_t width = stv_sample_bytes(data.type);
  if (bytes.size() != kStvHeaderBytes + width * data.dims.size())
    throw IoError(path.string() + ": file length does not match header");
  data.samples.resize(data.dims.size());
  const char* p = bytes.data() + kStvHeaderBytes;
  for (double& v : data.samples) {
    v = data.type == StvType::float32
            ? static_cast<double>(std::bit_cast<float>(get_le<std::uint32_t>(p)))
            : std::bit_cast<double>(get_le<std::uint64_t>(p));
    p += width;
  }
  return data;
}

SequenceVolume read_sequence(const std::filesystem::path& path) {
  auto data = read_stv(path);
  return SequenceVolume(data.dims, std::move(data.samples));
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  auto out = path;
  out.replace_extension(".json");
  return out;
}

void write_sidecar(const std::filesystem::path& path, const nlohmann::json& meta) {
  std::ofstream out(sidecar_path(path), std::ios::trunc);
  if (!out) throw IoError("cannot open " + sidecar_path(path).string() + " for writing");
  out << meta.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + sidecar_path(path).string());
}

nlohmann::json read_sidecar(const std::filesystem::path& path) {
  std::ifstream in(sidecar_path(path));
  if (!in) throw IoError("cannot open " + sidecar_path(path).string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(sidecar_path(path).string() + ": " + e.what());
  }
}

}  // namespace gcm::cli
