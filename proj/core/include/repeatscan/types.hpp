#pragma once

#include <cstdint>
#include <vector>

namespace repeatscan {

/// A 1-based position in the text. Every public interface speaks in
/// 1-based positions; vector slots are 0-based, so slot p - 1 holds the
/// value for position p.
using Position = std::uint32_t;

/// Length of a substring in characters.
using Length = std::uint32_t;

/// A substring S[start .. start + length - 1] stored as a tuple.
struct LlrEntry {
  Position start = 0;
  Length length = 0;

  /// Last position covered. Only meaningful when length >= 1.
  [[nodiscard]] constexpr Position end() const noexcept {
    return start + length - 1;
  }

  [[nodiscard]] constexpr bool covers(Position k) const noexcept {
    return length > 0 && start <= k && k <= end();
  }

  friend constexpr bool operator==(const LlrEntry&, const LlrEntry&) = default;
};

/// Answer to a leftmost longest-repeat query. When no repeat covers the
/// position, `exists` is false and start/length are zero; the serialized
/// form of that case is "-1, 0".
struct LrAnswer {
  bool exists = false;
  Position start = 0;
  Length length = 0;

  static constexpr LrAnswer none() noexcept { return {}; }
  static constexpr LrAnswer of(LlrEntry e) noexcept {
    return {true, e.start, e.length};
  }

  friend constexpr bool operator==(const LrAnswer&, const LrAnswer&) = default;
};

/// Every longest repeat covering a position, ordered by increasing start.
/// Empty when the position is covered by no repeat.
using LrAnswerSet = std::vector<LlrEntry>;

}  // namespace repeatscan
