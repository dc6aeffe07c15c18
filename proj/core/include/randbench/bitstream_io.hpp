// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "randbench/bitstream.hpp"

namespace randbench {

enum class FileFormat {
  kPacked,  // ceil(len/8) bytes MSB-first, plus a "<path>.meta" descriptor
  kAscii,   // '0'/'1' text, whitespace ignored
};

// Parses "packed" / "ascii". Throws ParameterError otherwise.
FileFormat ParseFileFormat(std::string_view name);
std::string_view FileFormatName(FileFormat format);

// Sidecar descriptor of a packed stream file. Stored as a small JSON object.
struct StreamDescriptor {
  std::uint64_t bit_length = 0;
  std::string source_label;
  std::string created_utc;  // ISO-8601, e.g. 2026-10-16T09:30:00Z
  std::string sha256_of_payload;
};

std::filesystem::path DescriptorPath(const std::filesystem::path& payload);

// Lowercase hex SHA-256.
std::string Sha256Hex(std::span<const std::uint8_t> data);
std::string Sha256Hex(const BitStream& stream);

std::string UtcTimestamp();

// Writes the stream (and, for packed files, its descriptor).
void WriteStream(const BitStream& stream, const std::filesystem::path& path,
                 FileFormat format, std::string_view source_label = {});

// Reads a stream back. For packed files the descriptor must exist, parse,
// agree with the payload hash, and declare no more bits than the payload
// holds. Failures raise IoError or FormatError naming the path.
BitStream ReadStream(const std::filesystem::path& path, FileFormat format);

StreamDescriptor ReadDescriptor(const std::filesystem::path& payload);

}  // namespace randbench
