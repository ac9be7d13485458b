#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace qchroma {

// Exact scalar layer. All coefficient arithmetic in the artifact goes through
// these; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace qchroma
