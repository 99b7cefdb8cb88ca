#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mulink {

// Exact arbitrary-precision integers. Milnor numbers of long sequences grow
// quickly and must not wrap.
using Integer = boost::multiprecision::cpp_int;

} // namespace mulink
