#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace seqknap {

// Exact rational values everywhere; item values and derived profits must never
// go through floating point, since gain comparisons decide block membership.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Counts, sizes and capacities are small integers by contract (enumeration
// budgets cap everything near 1e6), so a plain 64-bit type is enough.
using Count = long long;

// "num/den" when the denominator is not 1, plain integer text otherwise.
std::string rat_to_string(const Rat& r);

// Accepts "7", "-3", "22/7". Throws parse_error on anything else or on a
// zero denominator.
Rat rat_from_string(const std::string& text);

} // namespace seqknap
