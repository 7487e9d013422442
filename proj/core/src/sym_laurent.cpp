#include "k0ring/sym_laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace k0ring {

namespace {
const BigInt kZero = 0;
}

void SymLaurent::prune() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0)
      it = c_.erase(it);
    else
      ++it;
  }
}

SymLaurent SymLaurent::from_map(std::map<long, BigInt> coeffs) {
  SymLaurent r;
  r.c_ = std::move(coeffs);
  r.prune();
  for (const auto& [e, v] : r.c_) {
    auto it = r.c_.find(-e);
    if (it == r.c_.end() || it->second != v)
      throw std::invalid_argument("symmetric Laurent polynomial requires coeff(e) == coeff(-e)");
  }
  return r;
}

SymLaurent SymLaurent::symmetric_term(long e, BigInt c) {
  SymLaurent r;
  if (c != 0) {
    r.c_[e] = c;
    r.c_[-e] = std::move(c);
  }
  return r;
}

const BigInt& SymLaurent::coeff(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? kZero : it->second;
}

long SymLaurent::max_exponent() const {
  if (c_.empty()) throw std::logic_error("max_exponent of zero");
  return c_.rbegin()->first;
}

SymLaurent SymLaurent::operator-() const {
  SymLaurent r = *this;
  for (auto& [e, v] : r.c_) v = -v;
  return r;
}

SymLaurent SymLaurent::operator+(const SymLaurent& o) const {
  SymLaurent r = *this;
  for (const auto& [e, v] : o.c_) r.c_[e] += v;
  r.prune();
  return r;
}

SymLaurent SymLaurent::operator-(const SymLaurent& o) const {
  SymLaurent r = *this;
  for (const auto& [e, v] : o.c_) r.c_[e] -= v;
  r.prune();
  return r;
}

SymLaurent SymLaurent::operator*(const SymLaurent& o) const {
  SymLaurent r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.c_[e1 + e2] += v1 * v2;
  r.prune();
  return r;
}

SymLaurent SymLaurent::scaled(const BigInt& s) const {
  SymLaurent r;
  if (s == 0) return r;
  r.c_ = c_;
  for (auto& [e, v] : r.c_) v *= s;
  return r;
}

SymLaurent SymLaurent::substitute_power(long m) const {
  if (m < 1) throw std::invalid_argument("substitute_power requires m >= 1");
  SymLaurent r;
  for (const auto& [e, v] : c_) r.c_[e * m] = v;
  return r;
}

IntPoly SymLaurent::clear_to_poly() const {
  if (c_.empty()) return IntPoly{};
  const long shift = -c_.begin()->first;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(c_.rbegin()->first + shift) + 1);
  for (const auto& [e, v] : c_) coeffs[static_cast<std::size_t>(e + shift)] = v;
  return IntPoly{std::move(coeffs)};
}

BigInt SymLaurent::eval_at_one() const {
  BigInt s = 0;
  for (const auto& [e, v] : c_) s += v;
  return s;
}

std::string SymLaurent::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, v] = *it;
    const bool neg = v < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    BigInt mag = abs(v);
    if (e == 0) {
      out += to_decimal(mag);
    } else {
      if (mag != 1) {
        out += to_decimal(mag);
        out += "*";
      }
      out += "t";
      if (e != 1) {
        out += "^";
        out += std::to_string(e);
      }
    }
  }
  return out;
}

SymLaurent SymLaurent::parse(std::string_view s) {
  std::map<long, BigInt> c;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto parse_int = [&]() -> BigInt {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw std::invalid_argument("laurent parse error: expected integer");
    return BigInt(std::string(s.substr(start, i - start)), 10);
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) {
      if (first) throw std::invalid_argument("laurent parse error: empty input");
      break;
    }
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("laurent parse error: expected '+' or '-'");
    }
    BigInt mag = 1;
    bool saw_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mag = parse_int();
      saw_coeff = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    long exp = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        BigInt e = parse_int();
        if (abs(e) > 10000000) throw std::invalid_argument("laurent parse error: exponent");
        exp = static_cast<long>(e.get_si());
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("laurent parse error: expected term");
    }
    c[exp] += sign * mag;
    first = false;
  }
  return from_map(std::move(c));
}

}  // namespace k0ring
