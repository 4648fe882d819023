#include "repeatscan/text.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace repeatscan {

Text::Text(std::string bytes) : bytes_(std::move(bytes)) {
  if (bytes_.size() > kMaxLength) {
    throw std::length_error("text of " + std::to_string(bytes_.size()) +
                            " bytes exceeds the supported maximum");
  }
  std::array<bool, 256> seen{};
  for (unsigned char c : bytes_) {
    if (!seen[c]) {
      seen[c] = true;
      ++sigma_;
    }
  }
}

unsigned char Text::at(Position p) const {
  check_position(p, bytes_.size(), "Text::at");
  return static_cast<unsigned char>(bytes_[p - 1]);
}

void check_position(Position k, std::size_t n, const char* what) {
  if (k < 1 || k > n) {
    throw std::out_of_range(std::string(what) + ": position " +
                            std::to_string(k) + " outside [1, " +
                            std::to_string(n) + "]");
  }
}

}  // namespace repeatscan
