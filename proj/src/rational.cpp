#include "gsec/rational.hpp"

#include <bit>
#include <limits>

#include "gsec/errors.hpp"

namespace gsec {

namespace mp = boost::multiprecision;

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (const auto slash = s.find('/'); slash != std::string::npos) {
      std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      trim(num);
      trim(den);
      if (!valid_int(num) || !valid_int(den)) throw ParseError("bad rational literal '" + s + "'");
      BigInt q(den);
      if (q == 0) throw ParseError("zero denominator in '" + s + "'");
      return Rational(BigInt(num), q);
    }
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
      const bool neg = !whole.empty() && whole[0] == '-';
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      if (frac.empty() || !valid_int(whole) || !valid_int(frac) || frac[0] == '-' || frac[0] == '+')
        throw ParseError("bad decimal literal '" + s + "'");
      BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      Rational r(BigInt(frac), scale);
      Rational w{BigInt(whole)};
      return neg ? Rational(w - r) : Rational(w + r);
    }
    if (!valid_int(s)) throw ParseError("bad rational literal '" + s + "'");
    return Rational(BigInt(s));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("bad rational literal '" + s + "': " + e.what());
  }
}

std::string to_string(const Rational& r) {
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

std::int64_t floor_int(const Rational& r) {
  const BigInt p = mp::numerator(r), q = mp::denominator(r);
  BigInt f = p / q;  // truncates toward zero
  if (p < 0 && f * q != p) f -= 1;
  return f.convert_to<std::int64_t>();
}

std::int64_t ceil_int(const Rational& r) { return -floor_int(-r); }

Rational sum_over(std::span<const Rational> values, std::uint32_t mask) {
  Rational total = 0;
  while (mask != 0) {
    const int v = std::countr_zero(mask);
    total += values[static_cast<std::size_t>(v)];
    mask &= mask - 1;
  }
  return total;
}

ScaledIntegers scale_to_integers(std::span<const Rational> values) {
  BigInt lcm = 1;
  for (const auto& v : values) lcm = mp::lcm(lcm, BigInt(mp::denominator(v)));
  ScaledIntegers out;
  out.denominator = lcm;
  out.values.reserve(values.size());
  const BigInt limit = std::numeric_limits<std::int64_t>::max() / 1024;
  for (const auto& v : values) {
    BigInt scaled = mp::numerator(v) * (lcm / mp::denominator(v));
    if (mp::abs(scaled) > limit) throw BadParams("cost values too large to scale exactly");
    out.values.push_back(scaled.convert_to<std::int64_t>());
  }
  return out;
}

}  // namespace gsec
