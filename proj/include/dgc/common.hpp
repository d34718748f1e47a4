#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dgc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& w) : std::runtime_error(w) {}
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& w, std::size_t pos)
      : Error(w + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Raised when an enumeration would scan more candidates than the configured
// budget.  The default budget is 10^9 candidates; the DGC_WORK_LIMIT
// environment variable overrides it.
struct WorkLimitError : Error {
  explicit WorkLimitError(const std::string& w) : Error(w) {}
};

std::uint64_t work_limit();

Int binomial(long n, long k);

}  // namespace dgc
