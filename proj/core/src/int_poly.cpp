#include "k0ring/int_poly.hpp"

#include <cctype>
#include <stdexcept>

namespace k0ring {

namespace {
const BigInt kZero = 0;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt v) {
  std::vector<BigInt> c;
  if (v != 0) c.push_back(std::move(v));
  return IntPoly{std::move(c)};
}

IntPoly IntPoly::monomial(BigInt coeff, std::size_t deg) {
  if (coeff == 0) return IntPoly{};
  std::vector<BigInt> c(deg + 1);
  c[deg] = std::move(coeff);
  return IntPoly{std::move(c)};
}

const BigInt& IntPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const BigInt& IntPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < o.c_.size()) c[i] += o.c_[i];
  }
  return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < o.c_.size()) c[i] -= o.c_[i];
  }
  return IntPoly{std::move(c)};
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly{};
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1);
  // Schoolbook convolution; exact, and fast enough for every degree this
  // library reaches over Z (the large-q sweeps run in evaluated domains).
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const mpz_srcptr a = c_[i].get_mpz_t();
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), a, o.c_[j].get_mpz_t());
    }
  }
  return IntPoly{std::move(c)};
}

IntPoly IntPoly::scaled(const BigInt& s) const {
  if (s == 0) return IntPoly{};
  IntPoly r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> c(c_.size() + k);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return IntPoly{std::move(c)};
}

BigInt IntPoly::eval(const BigInt& point) const {
  BigInt acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= point;
    acc += c_[i];
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly{};
  std::vector<BigInt> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly{std::move(c)};
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  BigInt g = content();
  if (g == 0 || g == 1) return *this;
  IntPoly r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::size_t IntPoly::max_coeff_bits() const {
  std::size_t m = 0;
  for (const auto& v : c_) m = std::max(m, bit_length(v));
  return m;
}

BigInt IntPoly::l1_norm() const {
  BigInt s = 0;
  for (const auto& v : c_) s += abs(v);
  return s;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& m) {
  if (!m.is_monic() || m.degree() < 1)
    throw std::invalid_argument("divisor must be monic nonconstant");
  const int md = m.degree();
  if (a.degree() < md) return {IntPoly{}, a};
  std::vector<BigInt> rem(a.coeffs());
  std::vector<BigInt> quo(rem.size() - md);
  for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(md);) {
    if (rem[i] == 0) continue;
    BigInt c = std::move(rem[i]);
    rem[i] = 0;
    const std::size_t base = i - md;
    for (int j = 0; j < md; ++j) {
      if (m.coeffs()[j] != 0)
        mpz_submul(rem[base + j].get_mpz_t(), c.get_mpz_t(), m.coeffs()[j].get_mpz_t());
    }
    quo[base] = std::move(c);
  }
  rem.resize(md);
  return {IntPoly{std::move(quo)}, IntPoly{std::move(rem)}};
}

IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
  IntPoly acc;
  for (std::size_t i = outer.size(); i-- > 0;) {
    acc = acc * inner;
    acc += IntPoly::constant(outer.coeffs()[i]);
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& v = c_[i];
    if (v == 0) continue;
    const bool neg = v < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    BigInt mag = abs(v);
    if (i == 0) {
      out += to_decimal(mag);
    } else {
      if (mag != 1) {
        out += to_decimal(mag);
        out += "*";
      }
      out += "x";
      if (i > 1) {
        out += "^";
        out += std::to_string(i);
      }
    }
  }
  return out;
}

std::string IntPoly::to_list_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += to_decimal(c_[i]);
  }
  out += "]";
  return out;
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

BigInt parse_int(std::string_view s, std::size_t& i) {
  std::size_t start = i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw std::invalid_argument("polynomial parse error: expected integer");
  return BigInt(std::string(s.substr(start, i - start)), 10);
}

IntPoly parse_list_form(std::string_view s) {
  std::size_t i = 0;
  skip_ws(s, i);
  if (i >= s.size() || s[i] != '[') throw std::invalid_argument("polynomial parse error");
  ++i;
  std::vector<BigInt> c;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws(s, i);
      c.push_back(parse_int(s, i));
      skip_ws(s, i);
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ']') {
        ++i;
        break;
      }
      throw std::invalid_argument("polynomial parse error: bad list form");
    }
  }
  skip_ws(s, i);
  if (i != s.size()) throw std::invalid_argument("polynomial parse error: trailing input");
  return IntPoly{std::move(c)};
}

}  // namespace

IntPoly IntPoly::parse(std::string_view s) {
  std::size_t i = 0;
  skip_ws(s, i);
  if (i < s.size() && s[i] == '[') return parse_list_form(s.substr(i));

  std::vector<BigInt> c;
  bool first = true;
  while (true) {
    skip_ws(s, i);
    if (i >= s.size()) {
      if (first) throw std::invalid_argument("polynomial parse error: empty input");
      break;
    }
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws(s, i);
    } else if (!first) {
      throw std::invalid_argument("polynomial parse error: expected '+' or '-'");
    }
    BigInt mag = 1;
    bool saw_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mag = parse_int(s, i);
      saw_coeff = true;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws(s, i);
      }
    }
    std::size_t exp = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        BigInt e = parse_int(s, i);
        if (e < 0 || e > 1000000) throw std::invalid_argument("polynomial parse error: exponent");
        exp = e.get_ui();
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("polynomial parse error: expected term");
    }
    if (c.size() < exp + 1) c.resize(exp + 1);
    c[exp] += sign * mag;
    first = false;
  }
  return IntPoly{std::move(c)};
}

}  // namespace k0ring
