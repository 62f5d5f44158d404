#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "advicesim/errors.hpp"

namespace advicesim {

using Index = std::uint64_t;

// Widths are capped so 2^n fits comfortably in both uint64 and double.
inline constexpr int kMaxWidth = 62;

inline std::uint64_t domain_size(int n) {
  if (n < 1 || n > kMaxWidth)
    throw InvalidWidth("domain width must be in [1, " +
                       std::to_string(kMaxWidth) + "], got " +
                       std::to_string(n));
  return std::uint64_t{1} << n;
}

// The bit string being embedded into (and recovered from) a distribution.
struct AdviceString {
  std::vector<std::uint8_t> bits;

  AdviceString() = default;
  explicit AdviceString(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  static AdviceString from_string(const std::string& text);
  std::string to_string() const;

  std::size_t size() const { return bits.size(); }
  std::size_t weight() const;  // Hamming weight
  void validate() const;       // q >= 1, bits in {0,1}

  bool operator==(const AdviceString&) const = default;
};

// Ordered (input index, label bit) pairs; the sampling-advice object.
struct TrainingSet {
  int n = 0;
  std::vector<std::pair<Index, std::uint8_t>> pairs;

  std::size_t size() const { return pairs.size(); }
  void validate() const;  // indices < 2^n, labels in {0,1}
};

}  // namespace advicesim
