#pragma once

#include <cmath>
#include <numbers>

#include "dstretch/chain.hpp"

namespace fixtures {

using namespace dstretch;

inline Chain symmetric_pair() { return make_chain({{{0, 0}, 1}, {{1, 0}, 1}}); }
inline TerminalPair symmetric_terminals(const Chain& c) { return make_terminals(c, {-1, 0}, {2, 0}); }

inline Point deg(const Circle& c, double degrees) { return c.at(degrees * std::numbers::pi / 180.0); }

}  // namespace fixtures
