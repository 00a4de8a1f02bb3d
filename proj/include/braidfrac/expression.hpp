#pragma once

#include <string>
#include <string_view>

#include "braidfrac/fraction.hpp"
#include "braidfrac/plorder.hpp"

namespace braidfrac {

/// `[1,1,3]`: canonical steps, comma-separated.
std::string format_steps(const ExpansionForest& f);

/// `frac T=[1,1] B=[1 -2] S=[1,2]`
std::string format_element(const FractionElement& e);

/// One element literal (see format_element). Steps may be separated by commas
/// or spaces. Errors are ParseError with line/column; flavor violations stay
/// FlavorError.
FractionElement parse_element(const GroupContext& ctx, std::string_view text);

/// expr := term ('*' term)* ; term := atom | 'inv(' expr ')' | '(' expr ')'
/// atom := element literal | 'id' | 'bh1(' i [',' over|under] ')'
///       | 'bh2(' i [',' k] ';' braid word ')'
/// For bh2 without k the block size is one more than the largest generator.
FractionElement parse_expression(const GroupContext& ctx, std::string_view text);

/// Inverse of format_plmap.
PLMap parse_plmap(std::string_view text);

}  // namespace braidfrac
