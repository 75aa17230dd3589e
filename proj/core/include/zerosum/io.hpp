#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace zerosum {

/// Writes via a temporary file and renames into place, so a failed write
/// never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

/// Reads a whole file; throws std::runtime_error on failure.
std::string read_file(const std::filesystem::path& path);

}  // namespace zerosum
