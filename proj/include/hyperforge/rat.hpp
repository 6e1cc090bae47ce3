#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperforge {

// Exact rational on int64. Every value in this library is desk-scale;
// arithmetic throws on overflow instead of wrapping.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;  // den > 0, gcd(|num|, den) == 1

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
  }

  friend Rat operator+(Rat a, Rat b) { return Rat(mulc(a.num, b.den) + mulc(b.num, a.den), mulc(a.den, b.den)); }
  friend Rat operator-(Rat a, Rat b) { return Rat(mulc(a.num, b.den) - mulc(b.num, a.den), mulc(a.den, b.den)); }
  friend Rat operator*(Rat a, Rat b) { return Rat(mulc(a.num, b.num), mulc(a.den, b.den)); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return Rat(mulc(a.num, b.den), mulc(a.den, b.num));
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return mulc(a.num, b.den) < mulc(b.num, a.den); }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  // value modulo 1, result in [0, 1); used for circle angles in turns
  Rat mod1() const {
    std::int64_t q = num / den;
    std::int64_t r = num % den;
    if (r < 0) { r += den; --q; }
    return Rat(r, den);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // parses "p" or "p/q"
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }

 private:
  static std::int64_t mulc(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }
};

}  // namespace hyperforge
