#pragma once

#include <filesystem>

#include "repeatscan/text.hpp"

namespace repeatscan::cli {

/// Reads the raw bytes of a file. With `chomp`, one trailing "\n" (or
/// "\r\n") is removed. Throws std::runtime_error if the file can't be read.
Text read_text_file(const std::filesystem::path& path, bool chomp);

}  // namespace repeatscan::cli
