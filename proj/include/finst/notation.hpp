#pragma once

// Text notation for classes.
//
//   divisor := term { ('+'|'-') term } | '(' int ',' int ',' int ')' | int ',' int ',' int
//   term    := [int ['*']] ('l' | 'e' | 'xi')
//   curve   := term over symbols 'lxi' | 'exi' | 'l2', or a raw triple
//
// Unicode spellings (U+2113 l, U+03BE xi, U+2212 minus) are accepted.  A raw
// triple is (l, e, xi) in signed storage; "a l - b e" gives e-coefficient -b.

#include <string>
#include <string_view>

#include "finst/chow.hpp"

namespace finst {

DivClass parse_div(std::string_view text);
CurveClass parse_curve(std::string_view text);

std::string format_div(const DivClass& d);
std::string format_curve(const CurveClass& c);

/// One-line statement of the storage convention, printed in every report.
extern const char* const kConventionBanner;

}  // namespace finst
