#include "quatloc/quaternion.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace quatloc {

Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_squared(q);
  if (n2 == 0.0) throw std::domain_error("inverse of zero quaternion");
  return conjugate(q) * (1.0 / n2);
}

std::string to_string(const Quaternion& q, int precision) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.*g%+.*gi%+.*gj%+.*gk", precision, q.w,
                precision, q.x, precision, q.y, precision, q.z);
  return buf;
}

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

// Reads one signed decimal number, allowing whitespace between sign and digits.
double read_number(std::string_view& s) {
  skip_ws(s);
  double sign = 1.0;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
    skip_ws(s);
  }
  char* end = nullptr;
  std::string head(s.substr(0, 64));
  const double v = std::strtod(head.c_str(), &end);
  if (end == head.c_str()) throw std::invalid_argument("quaternion parse: expected number");
  s.remove_prefix(static_cast<size_t>(end - head.c_str()));
  return sign * v;
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  std::string_view s = text;
  const double w = read_number(s);
  const double x = read_number(s);
  skip_ws(s);
  if (s.empty() || s.front() != 'i') throw std::invalid_argument("quaternion parse: expected 'i'");
  s.remove_prefix(1);
  const double y = read_number(s);
  skip_ws(s);
  if (s.empty() || s.front() != 'j') throw std::invalid_argument("quaternion parse: expected 'j'");
  s.remove_prefix(1);
  const double z = read_number(s);
  skip_ws(s);
  if (s.empty() || s.front() != 'k') throw std::invalid_argument("quaternion parse: expected 'k'");
  s.remove_prefix(1);
  skip_ws(s);
  if (!s.empty()) throw std::invalid_argument("quaternion parse: trailing characters");
  if (!std::isfinite(w) || !std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
    throw std::invalid_argument("quaternion parse: non-finite component");
  return {w, x, y, z};
}

}  // namespace quatloc
