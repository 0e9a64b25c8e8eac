#ifndef SHELLKIT_BIG_COUNT_HPP
#define SHELLKIT_BIG_COUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace shellkit {

/// Arbitrary-precision non-negative count (shellings, peelings, row sizes).
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& c) { return c.str(); }

} // namespace shellkit

#endif
