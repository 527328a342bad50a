#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "zagreb/graph.hpp"

namespace zagreb {

using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative index value. Never rounded, never compared through floats.
class IndexValue {
 public:
  IndexValue() = default;
  explicit IndexValue(BigInt value);
  explicit IndexValue(std::uint64_t value) : value_(value) {}

  [[nodiscard]] const BigInt& value() const noexcept { return value_; }
  [[nodiscard]] std::string to_string() const { return value_.str(); }

  friend bool operator==(const IndexValue& a, const IndexValue& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const IndexValue& a, const IndexValue& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  BigInt value_{1};
};

// Positive rational in lowest terms.
class ExactRatio {
 public:
  ExactRatio(BigInt numerator, BigInt denominator);

  [[nodiscard]] const BigInt& numerator() const noexcept { return num_; }
  [[nodiscard]] const BigInt& denominator() const noexcept { return den_; }
  [[nodiscard]] std::string to_string() const { return num_.str() + "/" + den_.str(); }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b);

 private:
  BigInt num_;
  BigInt den_;
};

// Product of squared degrees. A degree-0 vertex makes it 0.
IndexValue pi1(const Graph& g);
// Vertex form: product of d^d, with 0^0 = 1.
IndexValue pi2(const Graph& g);
// Edge form: product over edges of d(u)d(v).
IndexValue pi2_edge_form(const Graph& g);
IndexValue m1(const Graph& g);
IndexValue m2(const Graph& g);

// Natural-log views, for display only.
double ln_pi1(const Graph& g);
double ln_pi2(const Graph& g);

// x / (x + m); x, m >= 1.
ExactRatio ratio_t(std::uint64_t x, std::uint64_t m);
// x^x / (x + m)^(x + m); x, m >= 1.
ExactRatio ratio_l(std::uint64_t x, std::uint64_t m);

BigInt power(std::uint64_t base, std::uint64_t exponent);

}  // namespace zagreb
