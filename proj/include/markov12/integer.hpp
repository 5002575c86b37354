#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace markov12 {

using Integer = mpz_class;

// Accepts an optional sign followed by decimal digits; throws ParseError otherwise.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& z) { return z.get_str(10); }

}  // namespace markov12
