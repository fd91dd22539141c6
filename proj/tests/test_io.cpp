#include <gtest/gtest.h>

#include <sstream>

#include "dstretch/io.hpp"

using namespace dstretch;
using namespace dstretch::io;

TEST(PointFile, ParsesCommentsBlanksAndSigns) {
  std::istringstream in("# header\n0,0\n\n  1.5 , -2e-3 \n+3,4\r\n# tail\n");
  const auto pts = parse_points(in);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[1], (Point{1.5, -2e-3}));
  EXPECT_EQ(pts[2], (Point{3, 4}));
}

TEST(PointFile, MalformedLinesReportTheLine) {
  for (const char* text : {"0,0\nx;y\n", "0,0\n1\n", "0,0\n1,2,3\n", "1,nan\n", "1,\n", "1,2x\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_points(in), ParseError) << text;
  }
  std::istringstream in("0,0\nx;y\n");
  try {
    parse_points(in);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(PointFile, RoundTrip) {
  const std::vector<Point> pts{{0.1, 1.0 / 3.0}, {-1e-300, 12345.678}};
  std::ostringstream out;
  write_points(out, pts);
  std::istringstream in(out.str());
  EXPECT_EQ(parse_points(in), pts);
}

TEST(ChainFile, ParsesCirclesAndTerminals) {
  std::istringstream in("0,0,1\n1,0,1\nu:-1,0 v:2,0\n");
  const ChainFile f = parse_chain(in);
  ASSERT_EQ(f.circles.size(), 2u);
  EXPECT_EQ(f.circles[1], (Circle{{1, 0}, 1}));
  ASSERT_TRUE(f.u && f.v);
  EXPECT_EQ(*f.u, (Point{-1, 0}));
  EXPECT_EQ(*f.v, (Point{2, 0}));

  std::ostringstream out;
  write_chain(out, f);
  std::istringstream again(out.str());
  const ChainFile g = parse_chain(again);
  EXPECT_EQ(g.circles, f.circles);
  EXPECT_EQ(*g.u, *f.u);
}

TEST(ChainFile, Errors) {
  for (const char* text : {"", "0,0\n", "0,0,-1\n", "0,0,1\nu:1,0\n", "0,0,1\nu:1,0 v:1,0\n0,0,2\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_chain(in), ParseError) << text;
  }
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}
