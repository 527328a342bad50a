#include "zagreb/indices.hpp"

#include <cmath>
#include <map>

#include "zagreb/error.hpp"

namespace zagreb {

namespace {

// degree -> number of vertices with that degree
std::map<std::size_t, std::uint64_t> degree_histogram(const Graph& g) {
  std::map<std::size_t, std::uint64_t> hist;
  for (std::size_t d : g.degrees()) ++hist[d];
  return hist;
}

void require_positive(std::uint64_t x, std::uint64_t m) {
  if (x == 0 || m == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "ratio helpers need x >= 1 and m >= 1, got x=" + std::to_string(x) +
                    " m=" + std::to_string(m));
  }
}

}  // namespace

BigInt power(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

IndexValue::IndexValue(BigInt value) : value_(std::move(value)) {
  if (value_ < 0) throw Error(ErrorCode::kInvalidArgument, "index values are nonnegative");
}

ExactRatio::ExactRatio(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ <= 0) throw Error(ErrorCode::kInvalidArgument, "denominator must be positive");
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  const int c = lhs.compare(rhs);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

IndexValue pi1(const Graph& g) {
  BigInt product = 1;
  for (const auto& [d, count] : degree_histogram(g)) product *= power(d, 2 * count);
  return IndexValue(std::move(product));
}

IndexValue pi2(const Graph& g) {
  BigInt product = 1;
  for (const auto& [d, count] : degree_histogram(g)) {
    if (d == 0) continue;  // 0^0 = 1
    product *= power(d, d * count);
  }
  return IndexValue(std::move(product));
}

IndexValue pi2_edge_form(const Graph& g) {
  BigInt product = 1;
  for (const Edge& e : g.edges()) {
    product *= BigInt(g.degree(e.u) * g.degree(e.v));
  }
  return IndexValue(std::move(product));
}

IndexValue m1(const Graph& g) {
  BigInt sum = 0;
  for (std::size_t d : g.degrees()) sum += BigInt(d * d);
  return IndexValue(std::move(sum));
}

IndexValue m2(const Graph& g) {
  BigInt sum = 0;
  for (const Edge& e : g.edges()) sum += BigInt(g.degree(e.u) * g.degree(e.v));
  return IndexValue(std::move(sum));
}

double ln_pi1(const Graph& g) {
  double total = 0.0;
  for (std::size_t d : g.degrees()) {
    if (d == 0) return -INFINITY;
    total += 2.0 * std::log(static_cast<double>(d));
  }
  return total;
}

double ln_pi2(const Graph& g) {
  double total = 0.0;
  for (std::size_t d : g.degrees()) {
    if (d > 0) total += static_cast<double>(d) * std::log(static_cast<double>(d));
  }
  return total;
}

ExactRatio ratio_t(std::uint64_t x, std::uint64_t m) {
  require_positive(x, m);
  return ExactRatio(BigInt(x), BigInt(x) + m);
}

ExactRatio ratio_l(std::uint64_t x, std::uint64_t m) {
  require_positive(x, m);
  return ExactRatio(power(x, x), power(x + m, x + m));
}

}  // namespace zagreb
