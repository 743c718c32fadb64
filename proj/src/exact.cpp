#include "diskcert/exact.hpp"

#include <algorithm>
#include <cmath>

#include "diskcert/errors.hpp"

namespace diskcert {

namespace {

using i128 = Int128;

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("exact root arithmetic overflow");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("exact root arithmetic overflow");
  return r;
}

// k copies of sqrt(r) collapse to sqrt(k^2 r); repeat until radicands are distinct.
void normalize(std::vector<i128>& v) {
  v.erase(std::remove(v.begin(), v.end(), i128{0}), v.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(v.begin(), v.end());
    std::vector<i128> out;
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      const i128 k = static_cast<i128>(j - i);
      if (k > 1) changed = true;
      out.push_back(checked_mul(checked_mul(k, k), v[i]));
      i = j;
    }
    v = std::move(out);
  }
}

void cancel_common(std::vector<i128>& pos, std::vector<i128>& neg) {
  for (auto it = pos.begin(); it != pos.end();) {
    auto hit = std::find(neg.begin(), neg.end(), *it);
    if (hit != neg.end()) {
      neg.erase(hit);
      it = pos.erase(it);
    } else {
      ++it;
    }
  }
}

i128 sum(const std::vector<i128>& v) {
  i128 s = 0;
  for (i128 x : v) s = checked_add(s, x);
  return s;
}

}  // namespace

int compare_root_sums(std::vector<i128> pos, std::vector<i128> neg) {
  for (i128 r : pos)
    if (r < 0) throw ContractViolation("negative radicand");
  for (i128 r : neg)
    if (r < 0) throw ContractViolation("negative radicand");
  normalize(pos);
  normalize(neg);
  cancel_common(pos, neg);
  if (pos.empty() && neg.empty()) return 0;
  if (neg.empty()) return 1;
  if (pos.empty()) return -1;
  if (pos.size() == 1 && neg.size() == 1) return (pos[0] > neg[0]) - (pos[0] < neg[0]);

  if (pos.size() == 1 && neg.size() == 3) return -compare_root_sums(neg, pos);
  if (pos.size() == 3 && neg.size() == 1) {
    // sqrt p0 + sqrt p1 versus sqrt n - sqrt p2.
    const i128 p0 = pos[0], p1 = pos[1], p2 = pos[2], n = neg[0];
    if (compare_root_sums({n}, {p2}) <= 0) return 1;
    const i128 k = checked_add(checked_add(p0, p1), -checked_add(n, p2));
    std::vector<i128> next_pos{checked_mul(4, checked_mul(p0, p1)), checked_mul(4, checked_mul(n, p2))};
    std::vector<i128> next_neg;
    if (k > 0) next_pos.push_back(checked_mul(k, k));
    if (k < 0) next_neg.push_back(checked_mul(k, k));
    return compare_root_sums(std::move(next_pos), std::move(next_neg));
  }
  if (pos.size() > 2 || neg.size() > 2) {
    throw InvariantViolation("root sum with more than four terms is not supported");
  }

  // Both sides are positive, so squaring preserves the comparison.
  const i128 k = checked_add(sum(pos), -sum(neg));
  std::vector<i128> next_pos;
  std::vector<i128> next_neg;
  if (pos.size() == 2) next_pos.push_back(checked_mul(4, checked_mul(pos[0], pos[1])));
  if (neg.size() == 2) next_neg.push_back(checked_mul(4, checked_mul(neg[0], neg[1])));
  if (k > 0) next_pos.push_back(checked_mul(k, k));
  if (k < 0) next_neg.push_back(checked_mul(k, k));
  return compare_root_sums(std::move(next_pos), std::move(next_neg));
}

bool root_triangle_holds(std::int64_t a, std::int64_t b, std::int64_t c) {
  return compare_root_sums({a}, {b, c}) <= 0;
}

double Length::value() const { return std::sqrt(static_cast<double>(squared_)); }

std::string Length::to_string() const {
  const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(squared_))));
  if (r * r == squared_) return std::to_string(r);
  return "sqrt(" + std::to_string(squared_) + ")";
}

RootSum RootSum::of(const Length& len, int sign) {
  RootSum r;
  if (len.squared() != 0) r.terms_.push_back({sign >= 0 ? 1 : -1, len.squared()});
  return r;
}

RootSum operator+(RootSum a, const RootSum& b) {
  a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
  return a;
}

RootSum operator-(RootSum a, const RootSum& b) { return a + (-b); }

RootSum RootSum::operator-() const {
  RootSum r = *this;
  for (auto& t : r.terms_) t.sign = -t.sign;
  return r;
}

int RootSum::sign() const {
  std::vector<i128> pos;
  std::vector<i128> neg;
  for (const auto& t : terms_) (t.sign > 0 ? pos : neg).push_back(t.radicand);
  return compare_root_sums(std::move(pos), std::move(neg));
}

RootSum RootSum::abs() const { return sign() < 0 ? -*this : *this; }

double RootSum::approx() const {
  double s = 0;
  for (const auto& t : terms_) s += t.sign * std::sqrt(static_cast<double>(t.radicand));
  return s;
}

std::string RootSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i > 0 || t.sign < 0) out += t.sign < 0 ? "-" : "+";
    out += Length(static_cast<std::int64_t>(t.radicand)).to_string();
  }
  return out;
}

std::strong_ordering operator<=>(const RootSum& a, const RootSum& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace diskcert
