#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "repeatscan/types.hpp"

namespace repeatscan {

/// Input string of raw bytes with 1-based character access.
class Text {
 public:
  /// Largest supported text length. Suffix sorting works on 32-bit signed
  /// slots.
  static constexpr std::size_t kMaxLength = 0x7ffffffe;

  Text() = default;

  /// Throws std::length_error if `bytes` exceeds kMaxLength.
  explicit Text(std::string bytes);

  [[nodiscard]] std::size_t size() const noexcept { return bytes_.size(); }
  [[nodiscard]] bool empty() const noexcept { return bytes_.empty(); }

  /// Number of distinct byte values present.
  [[nodiscard]] std::size_t sigma() const noexcept { return sigma_; }

  /// Character at 1-based position p. Throws std::out_of_range.
  [[nodiscard]] unsigned char at(Position p) const;

  [[nodiscard]] std::string_view view() const noexcept { return bytes_; }
  [[nodiscard]] const std::string& bytes() const noexcept { return bytes_; }

 private:
  std::string bytes_;
  std::size_t sigma_ = 0;
};

/// Throws std::out_of_range unless 1 <= k <= n.
void check_position(Position k, std::size_t n, const char* what);

}  // namespace repeatscan
