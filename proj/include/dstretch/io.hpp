#pragma once

// Text formats.
//
// Point files: one "x,y" per line. Chain files: one "cx,cy,r" per line and an
// optional trailing terminal line "u:ux,uy v:vx,vy". In both, blank lines and
// lines starting with '#' are ignored.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dstretch/errors.hpp"
#include "dstretch/geometry.hpp"

namespace dstretch::io {

class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

std::vector<Point> parse_points(std::istream& in);
std::vector<Point> read_points(const std::filesystem::path& path);
void write_points(std::ostream& out, const std::vector<Point>& points);

struct ChainFile {
  std::vector<Circle> circles;
  std::optional<Point> u;
  std::optional<Point> v;
};

ChainFile parse_chain(std::istream& in);
ChainFile read_chain(const std::filesystem::path& path);
void write_chain(std::ostream& out, const ChainFile& chain);

/// Shortest text that round-trips, at most 17 significant digits.
std::string format_double(double x);

}  // namespace dstretch::io
