#include "quatloc/polyio.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace quatloc {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

QPolynomial parse_polynomial(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("polynomial parse: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("side") || !doc.contains("coeffs"))
    throw std::invalid_argument("polynomial parse: expected object with 'side' and 'coeffs'");

  const std::string side_str = doc["side"].is_string() ? doc["side"].get<std::string>() : "";
  CoeffSide side;
  if (side_str == "left")
    side = CoeffSide::Left;
  else if (side_str == "right")
    side = CoeffSide::Right;
  else
    throw std::invalid_argument("polynomial parse: side must be \"left\" or \"right\"");

  if (!doc["coeffs"].is_array() || doc["coeffs"].empty())
    throw std::invalid_argument("polynomial parse: coeffs must be a non-empty array");

  std::vector<Quaternion> coeffs;
  for (const auto& entry : doc["coeffs"]) {
    if (!entry.is_array() || entry.size() != 4)
      throw std::invalid_argument("polynomial parse: each coefficient needs 4 components");
    double comp[4];
    for (size_t i = 0; i < 4; ++i) {
      if (!entry[i].is_number())
        throw std::invalid_argument("polynomial parse: coefficient component is not a number");
      comp[i] = entry[i].get<double>();
      if (!std::isfinite(comp[i]))
        throw std::invalid_argument("polynomial parse: non-finite coefficient component");
    }
    coeffs.emplace_back(comp[0], comp[1], comp[2], comp[3]);
  }
  try {
    return {std::move(coeffs), side};
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("polynomial parse: ") + e.what());
  }
}

QPolynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polynomial(buf.str());
}

std::string format_polynomial(const QPolynomial& p) {
  std::ostringstream out;
  out << "{\n  \"side\": \"" << side_name(p.side()) << "\",\n  \"coeffs\": [\n";
  for (size_t k = 0; k < p.coeffs().size(); ++k) {
    const Quaternion& c = p.coeffs()[k];
    out << "    [" << fmt_double(c.w) << ", " << fmt_double(c.x) << ", " << fmt_double(c.y)
        << ", " << fmt_double(c.z) << "]" << (k + 1 < p.coeffs().size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

std::string polynomial_digest(const QPolynomial& p) {
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](double v) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ull;
    }
  };
  for (const Quaternion& c : p.coeffs()) {
    mix(c.w);
    mix(c.x);
    mix(c.y);
    mix(c.z);
  }
  h ^= p.side() == CoeffSide::Left ? 0x4cull : 0x52ull;
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

}  // namespace quatloc
