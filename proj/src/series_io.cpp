#include "univalent/series_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace univalent {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token) {
  token = trim(token);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("not a number: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::runtime_error("format_double: buffer too small");
  return std::string(buf.data(), ptr);
}

CoefficientSequence parse_coefficients_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("coefficient JSON must be an array of numbers");
  std::vector<double> c;
  c.reserve(doc.size());
  for (const auto& v : doc) {
    if (!v.is_number()) throw std::invalid_argument("coefficient JSON must be an array of numbers");
    c.push_back(v.get<double>());
  }
  return CoefficientSequence(std::move(c));
}

CoefficientSequence parse_coefficients_csv(std::string_view text) {
  std::vector<double> c;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const auto row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    if (first) {
      first = false;
      if (row == "k,a_k") continue;
    }
    const auto comma = row.find(',');
    if (comma == std::string_view::npos) {
      c.push_back(parse_number(row));
      continue;
    }
    const double k = parse_number(row.substr(0, comma));
    if (k != static_cast<double>(c.size() + 1)) {
      throw std::invalid_argument("CSV rows must list k = 1, 2, ... in order");
    }
    c.push_back(parse_number(row.substr(comma + 1)));
  }
  return CoefficientSequence(std::move(c));
}

CoefficientSequence parse_coefficients(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '[') return parse_coefficients_json(body);
  return parse_coefficients_csv(body);
}

CoefficientSequence parse_inline_coefficients(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::vector<double> c;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto next = text.find_first_of(", \t", pos);
    const auto token = trim(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    if (!token.empty()) c.push_back(parse_number(token));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return CoefficientSequence(std::move(c));
}

CoefficientSequence read_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_coefficients(ss.str());
}

std::string coefficients_to_json(const CoefficientSequence& f) {
  std::string out = "[";
  for (std::size_t k = 1; k <= f.degree(); ++k) {
    if (k > 1) out += ",";
    out += format_double(f[k]);
  }
  return out + "]";
}

std::string coefficients_to_csv(const CoefficientSequence& f) {
  std::string out = "k,a_k\n";
  for (std::size_t k = 1; k <= f.degree(); ++k) {
    out += std::to_string(k) + "," + format_double(f[k]) + "\n";
  }
  return out;
}

}  // namespace univalent
