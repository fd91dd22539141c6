#include "dstretch/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace dstretch::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

double parse_real(std::string_view field, std::size_t line) {
  field = trim(field);
  if (field.empty()) throw ParseError(line, "empty number");
  if (field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError(line, "not a decimal number: '" + std::string(field) + "'");
  if (!std::isfinite(value)) throw ParseError(line, "non-finite number");
  return value;
}

std::vector<double> parse_fields(std::string_view text, std::size_t expected, std::size_t line) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), line));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected)
    throw ParseError(line, "expected " + std::to_string(expected) + " comma-separated values, got " +
                               std::to_string(out.size()));
  return out;
}

Point parse_point_text(std::string_view text, std::size_t line) {
  const auto v = parse_fields(text, 2, line);
  return {v[0], v[1]};
}

}  // namespace

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> points;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (skippable(s)) continue;
    points.push_back(parse_point_text(s, line));
  }
  return points;
}

std::vector<Point> read_points(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  return parse_points(in);
}

void write_points(std::ostream& out, const std::vector<Point>& points) {
  for (const auto& p : points) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

ChainFile parse_chain(std::istream& in) {
  ChainFile chain;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (skippable(s)) continue;
    if (chain.u) throw ParseError(line, "content after the terminal line");
    if (s.starts_with("u:")) {
      const auto vpos = s.find("v:");
      if (vpos == std::string_view::npos) throw ParseError(line, "terminal line needs 'u:x,y v:x,y'");
      chain.u = parse_point_text(trim(s.substr(2, vpos - 2)), line);
      chain.v = parse_point_text(trim(s.substr(vpos + 2)), line);
      continue;
    }
    const auto v = parse_fields(s, 3, line);
    if (!(v[2] > 0.0)) throw ParseError(line, "radius must be positive");
    chain.circles.push_back({{v[0], v[1]}, v[2]});
  }
  if (chain.circles.empty()) throw ParseError(line, "no circles");
  return chain;
}

ChainFile read_chain(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  return parse_chain(in);
}

void write_chain(std::ostream& out, const ChainFile& chain) {
  for (const auto& c : chain.circles)
    out << format_double(c.center.x) << ',' << format_double(c.center.y) << ',' << format_double(c.radius) << '\n';
  if (chain.u && chain.v)
    out << "u:" << format_double(chain.u->x) << ',' << format_double(chain.u->y) << " v:" << format_double(chain.v->x)
        << ',' << format_double(chain.v->y) << '\n';
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return std::to_string(x);
  return std::string(buf, ptr);
}

}  // namespace dstretch::io
