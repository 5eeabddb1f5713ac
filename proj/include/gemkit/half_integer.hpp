#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gemkit {

/// Exact value twice_value / 2. Regular genera of non-orientable surfaces are
/// half-integers, so genus arithmetic never goes through floating point.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr explicit HalfInteger(std::int64_t integer) : twice_(2 * integer) {}

  static constexpr HalfInteger from_twice(std::int64_t twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }

  /// "3", "-1", "1/2", "-3/2".
  std::string to_string() const;

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfInteger operator*(std::int64_t k, HalfInteger a) {
    return from_twice(k * a.twice_);
  }
  constexpr HalfInteger& operator+=(HalfInteger o) {
    twice_ += o.twice_;
    return *this;
  }
  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  std::int64_t twice_ = 0;
};

}  // namespace gemkit
