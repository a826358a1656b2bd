#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace dessins {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 128-bit binary float for all series evaluation.
using Quad = boost::multiprecision::cpp_bin_float_quad;

// Resource-guard violation (degree/cutoff limits). The CLI maps this to
// exit code 2, everything derived from std::invalid_argument to exit 1.
class GuardError : public std::runtime_error {
public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity that failed to verify. Findings are values, not
// errors; this exception is only used when a caller asks for strict mode.
class FindingError : public std::runtime_error {
public:
  explicit FindingError(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic 64-bit generator (splitmix64). Byte-stable across
// platforms, unlike distributions from <random>.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // small random rational with numerator in [-bound, bound], denominator in [1, bound]
  Rational rational(int bound) {
    long num = static_cast<long>(below(2 * bound + 1)) - bound;
    long den = static_cast<long>(below(bound)) + 1;
    return Rational(num, den);
  }

private:
  std::uint64_t state_;
};

std::string to_string(const Rational& q);

}  // namespace dessins
