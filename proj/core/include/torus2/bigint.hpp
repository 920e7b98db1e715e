#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace torus2 {

// Closed-form counts grow like 2^m; exact arithmetic everywhere.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace torus2
