#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "squeeze.hpp"

namespace skorodist {

enum class Sign : int { minus = 0, plus = 1 };

/// A split real number t- or t+. The two infinite split times are -inf (sign +)
/// and +inf (sign -); no arithmetic is defined on split times.
class SplitTime {
 public:
  constexpr SplitTime() = default;
  SplitTime(double real, Sign sign) : real_(real), sign_(sign) {
    if (std::isnan(real)) throw InputError("split time cannot be NaN");
    if (real == -kInf) sign_ = Sign::plus;
    if (real == kInf) sign_ = Sign::minus;
  }

  static SplitTime minus(double t) { return {t, Sign::minus}; }
  static SplitTime plus(double t) { return {t, Sign::plus}; }
  static SplitTime neg_infinity() { return {-kInf, Sign::plus}; }
  static SplitTime pos_infinity() { return {kInf, Sign::minus}; }

  double real() const { return real_; }
  Sign sign() const { return sign_; }
  bool is_infinite() const { return std::isinf(real_); }

  // Lexicographic: real part first, then - before +.
  friend std::strong_ordering operator<=>(const SplitTime& a, const SplitTime& b) {
    if (a.real_ < b.real_) return std::strong_ordering::less;
    if (a.real_ > b.real_) return std::strong_ordering::greater;
    return static_cast<int>(a.sign_) <=> static_cast<int>(b.sign_);
  }
  friend bool operator==(const SplitTime& a, const SplitTime& b) {
    return a.real_ == b.real_ && a.sign_ == b.sign_;
  }

 private:
  double real_ = 0.0;
  Sign sign_ = Sign::minus;
};

inline std::strong_ordering cmp(const SplitTime& a, const SplitTime& b) { return a <=> b; }

/// Textual form: "1.5-", "1.5+", "-inf", "+inf".
inline std::string to_string(const SplitTime& s) {
  if (s.real() == -kInf) return "-inf";
  if (s.real() == kInf) return "+inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf - 1, s.real());
  *res.ptr++ = s.sign() == Sign::minus ? '-' : '+';
  return std::string(buf, res.ptr);
}

inline SplitTime parse_split_time(std::string_view text) {
  if (text == "-inf") return SplitTime::neg_infinity();
  if (text == "+inf" || text == "inf") return SplitTime::pos_infinity();
  if (text.size() < 2) throw InputError("bad split time: " + std::string(text));
  const char sc = text.back();
  if (sc != '-' && sc != '+') throw InputError("split time needs a trailing sign: " + std::string(text));
  const std::string num(text.substr(0, text.size() - 1));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(num, &used);
  } catch (const std::exception&) {
    throw InputError("bad split time: " + std::string(text));
  }
  if (used != num.size() || !std::isfinite(v)) throw InputError("bad split time: " + std::string(text));
  return {v, sc == '-' ? Sign::minus : Sign::plus};
}

/// An interval of the split real line. Closed by default; either end may be open.
struct SplitInterval {
  SplitTime lo;
  SplitTime hi;
  bool lo_open = false;
  bool hi_open = false;

  static SplitInterval closed(SplitTime lo, SplitTime hi) {
    if (hi < lo) throw InputError("split interval with hi < lo");
    return {lo, hi, false, false};
  }
  static SplitInterval open(SplitTime lo, SplitTime hi) {
    if (hi < lo) throw InputError("split interval with hi < lo");
    return {lo, hi, true, true};
  }
};

inline bool interval_contains(const SplitInterval& iv, const SplitTime& tau) {
  const bool above = iv.lo_open ? iv.lo < tau : iv.lo <= tau;
  const bool below = iv.hi_open ? tau < iv.hi : tau <= iv.hi;
  return above && below;
}

/// I_s = {t-, t+ : t in I} in increasing order. `times` must be sorted and duplicate-free.
inline std::vector<SplitTime> split_domain(const std::vector<double>& times) {
  std::vector<SplitTime> out;
  out.reserve(2 * times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw InputError("split_domain needs finite times");
    if (i > 0 && !(times[i - 1] < times[i])) throw InputError("split_domain needs sorted, distinct times");
    out.push_back(SplitTime::minus(times[i]));
    out.push_back(SplitTime::plus(times[i]));
  }
  return out;
}

}  // namespace skorodist
