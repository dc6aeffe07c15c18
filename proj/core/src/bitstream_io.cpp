// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include "randbench/bitstream_io.hpp"

#include <sodium.h>

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <vector>

#include "randbench/error.hpp"

namespace randbench {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::uint8_t> ReadAllBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure on " + path.string());
  return data;
}

void WriteAllBytes(const fs::path& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failure on " + path.string());
}

// Payload bytes including the final partial byte (zero-filled past the end).
std::vector<std::uint8_t> PackedPayload(const BitStream& stream) {
  std::vector<std::uint8_t> bytes((stream.size() + 7) / 8);
  auto words = stream.words();
  for (std::size_t k = 0; k < bytes.size(); ++k) {
    bytes[k] = static_cast<std::uint8_t>(words[k / 8] >> (56 - 8 * (k % 8)));
  }
  return bytes;
}

}  // namespace

FileFormat ParseFileFormat(std::string_view name) {
  if (name == "packed") return FileFormat::kPacked;
  if (name == "ascii") return FileFormat::kAscii;
  throw ParameterError("unknown stream format '" + std::string(name) +
                       "' (expected packed or ascii)");
}

std::string_view FileFormatName(FileFormat format) {
  return format == FileFormat::kPacked ? "packed" : "ascii";
}

fs::path DescriptorPath(const fs::path& payload) {
  return fs::path(payload.string() + ".meta");
}

std::string Sha256Hex(std::span<const std::uint8_t> data) {
  static const bool ready = sodium_init() >= 0;
  if (!ready) throw Error("libsodium initialisation failed");
  std::array<unsigned char, crypto_hash_sha256_BYTES> digest{};
  crypto_hash_sha256(digest.data(), data.data(), data.size());
  std::array<char, crypto_hash_sha256_BYTES * 2 + 1> hex{};
  sodium_bin2hex(hex.data(), hex.size(), digest.data(), digest.size());
  return std::string(hex.data());
}

std::string Sha256Hex(const BitStream& stream) {
  return Sha256Hex(PackedPayload(stream));
}

std::string UtcTimestamp() {
  std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf.data();
}

void WriteStream(const BitStream& stream, const fs::path& path,
                 FileFormat format, std::string_view source_label) {
  if (format == FileFormat::kAscii) {
    std::string text = ToAscii(stream);
    text.push_back('\n');
    WriteAllBytes(path, std::span(reinterpret_cast<const std::uint8_t*>(
                                      text.data()),
                                  text.size()));
    return;
  }
  std::vector<std::uint8_t> payload = PackedPayload(stream);
  WriteAllBytes(path, payload);
  json meta = {
      {"bit_length", stream.size()},
      {"source_label", std::string(source_label)},
      {"created_utc", UtcTimestamp()},
      {"sha256_of_payload", Sha256Hex(payload)},
  };
  std::string text = meta.dump(2) + "\n";
  WriteAllBytes(DescriptorPath(path),
                std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                          text.size()));
}

StreamDescriptor ReadDescriptor(const fs::path& payload) {
  fs::path meta_path = DescriptorPath(payload);
  if (!fs::exists(meta_path)) {
    throw FormatError("missing descriptor " + meta_path.string());
  }
  std::vector<std::uint8_t> raw = ReadAllBytes(meta_path);
  StreamDescriptor desc;
  try {
    json meta = json::parse(raw.begin(), raw.end());
    desc.bit_length = meta.at("bit_length").get<std::uint64_t>();
    desc.source_label = meta.at("source_label").get<std::string>();
    desc.created_utc = meta.at("created_utc").get<std::string>();
    desc.sha256_of_payload = meta.at("sha256_of_payload").get<std::string>();
  } catch (const json::exception& e) {
    throw FormatError("corrupt descriptor " + meta_path.string() + ": " +
                      e.what());
  }
  return desc;
}

BitStream ReadStream(const fs::path& path, FileFormat format) {
  if (!fs::exists(path)) throw IoError("no such file: " + path.string());
  std::vector<std::uint8_t> data = ReadAllBytes(path);
  if (format == FileFormat::kAscii) {
    try {
      return FromAscii(std::string_view(
          reinterpret_cast<const char*>(data.data()), data.size()));
    } catch (const FormatError& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
  }
  StreamDescriptor desc = ReadDescriptor(path);
  if (desc.bit_length > data.size() * 8) {
    throw FormatError(path.string() + ": descriptor declares " +
                      std::to_string(desc.bit_length) +
                      " bits but payload holds " +
                      std::to_string(data.size() * 8));
  }
  if (Sha256Hex(data) != desc.sha256_of_payload) {
    throw FormatError(path.string() + ": payload hash does not match descriptor");
  }
  return BitStream::FromBytes(data, desc.bit_length);
}

}  // namespace randbench
