#include "gemkit/half_integer.hpp"

namespace gemkit {

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace gemkit
