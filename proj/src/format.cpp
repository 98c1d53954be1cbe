#include "lz/format.hpp"

#include <charconv>

namespace lz {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_double_sig(double v, int significant) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

}  // namespace lz
