#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace diskcert {

__extension__ typedef __int128 Int128;

// A Euclidean length stored exactly through its integer square.
class Length {
 public:
  constexpr Length() = default;
  constexpr explicit Length(std::int64_t squared) : squared_(squared) {}

  constexpr std::int64_t squared() const { return squared_; }
  double value() const;
  std::string to_string() const;

  friend constexpr auto operator<=>(const Length&, const Length&) = default;

 private:
  std::int64_t squared_ = 0;
};

// Exact value of a short signed sum of square roots of integers,
// sum_i s_i * sqrt(r_i). Sign decisions use repeated squaring in 128-bit
// integers; at most four terms are supported, which covers every
// difference of two signed two-term potentials.
class RootSum {
 public:
  struct Term {
    int sign = 1;
    Int128 radicand = 0;
  };

  RootSum() = default;
  static RootSum of(const Length& len, int sign = 1);

  friend RootSum operator+(RootSum a, const RootSum& b);
  friend RootSum operator-(RootSum a, const RootSum& b);
  RootSum operator-() const;

  int sign() const;
  RootSum abs() const;
  double approx() const;
  std::string to_string() const;
  const std::vector<Term>& terms() const { return terms_; }

  friend std::strong_ordering operator<=>(const RootSum& a, const RootSum& b);
  friend bool operator==(const RootSum& a, const RootSum& b) { return (a - b).sign() == 0; }

 private:
  std::vector<Term> terms_;
};

// sign(sqrt(a) - sqrt(b) - sqrt(c)) etc. exposed for the metric checks.
// Returns sign(sum(sqrt(pos)) - sum(sqrt(neg))).
int compare_root_sums(std::vector<Int128> pos, std::vector<Int128> neg);

// Exact test of sqrt(a) <= sqrt(b) + sqrt(c).
bool root_triangle_holds(std::int64_t a, std::int64_t b, std::int64_t c);

}  // namespace diskcert
