#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "fishbij/errors.hpp"

namespace fishbij {

using BigCount = boost::multiprecision::cpp_int;

BigCount binomial(long long n, long long k);

// Division that must be exact; throws InexactDivision otherwise.  All closed
// counting formulas in this library divide exactly, so a remainder means a
// formula or transcription bug.
BigCount exact_div(const BigCount& num, const BigCount& den);

}  // namespace fishbij
