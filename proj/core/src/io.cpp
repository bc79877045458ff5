#include "sphtopo/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <limits>
#include <sstream>

#include "sphtopo/errors.hpp"
#include "sphtopo/format.hpp"

namespace sphtopo {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

double parse_real(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  std::string lower = t;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "+inf" || lower == "infinity" || lower == "+infinity") {
    return std::numeric_limits<double>::infinity();
  }
  if (lower == "-inf" || lower == "-infinity") return -std::numeric_limits<double>::infinity();
  if (lower == "nan") return std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
  const char* first = t.data();
  if (!t.empty() && t.front() == '+') ++first;
  const auto res = std::from_chars(first, t.data() + t.size(), value);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw IoError("cannot parse real number from '" + text + "'");
  }
  return value;
}

namespace io {

std::string library_version() {
#ifdef SPHTOPO_VERSION
  return SPHTOPO_VERSION;
#else
  return "unknown";
#endif
}

std::string field_to_json(const RandomEigenfunction& field) {
  // Hand-rolled so the coefficient text follows the 17-digit contract exactly.
  std::ostringstream out;
  out << "{\n  \"degree\": " << field.degree() << ",\n  \"seed\": " << field.seed()
      << ",\n  \"coefficients\": [";
  const auto c = field.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    out << (k == 0 ? "" : ", ") << format_real(c[k]);
  }
  out << "]\n}\n";
  return out.str();
}

RandomEigenfunction field_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const int ell = j.at("degree").get<int>();
    const auto seed = j.at("seed").get<std::uint64_t>();
    auto coefficients = j.at("coefficients").get<std::vector<double>>();
    return RandomEigenfunction(ell, seed, std::move(coefficients));
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("field JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw IoError(std::string("field JSON: ") + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void save_field(const std::filesystem::path& path, const RandomEigenfunction& field) {
  write_text(path, field_to_json(field));
}

RandomEigenfunction load_field(const std::filesystem::path& path) {
  return field_from_json(read_text(path));
}

}  // namespace io
}  // namespace sphtopo
