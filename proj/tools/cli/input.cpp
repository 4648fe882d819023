#include "cli/input.hpp"

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>

namespace repeatscan::cli {

Text read_text_file(const std::filesystem::path& path, bool chomp) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw std::runtime_error("input file not found: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read input file: " + path.string());
  }
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw std::runtime_error("error while reading input file: " +
                             path.string());
  }
  if (chomp && !bytes.empty() && bytes.back() == '\n') {
    bytes.pop_back();
    if (!bytes.empty() && bytes.back() == '\r') bytes.pop_back();
  }
  return Text(std::move(bytes));
}

}  // namespace repeatscan::cli
