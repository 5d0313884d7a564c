#pragma once

#include <cctype>
#include <iomanip>
#include <sstream>
#include <string>

#include "papertorus/errors.hpp"
#include "papertorus/real.hpp"

namespace papertorus {

// A coordinate kept as its decimal literal. Geometry reads it at whatever
// working precision the caller runs under; the certifier scales it to an
// exact integer without ever leaving decimal arithmetic. Round-trips through
// torus files verbatim.
class Decimal {
 public:
  Decimal() : text_("0") {}

  explicit Decimal(std::string text) : text_(std::move(text)) {
    if (!valid(text_)) throw Error("bad decimal literal: '" + text_ + "'");
  }

  static bool valid(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = 0, dots = 0;
    for (; i < s.size(); ++i) {
      if (s[i] == '.') {
        ++dots;
      } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++digits;
      } else {
        return false;
      }
    }
    return digits > 0 && dots <= 1;
  }

  const std::string& text() const { return text_; }

  // Value at the current working precision.
  Real value() const { return Real(text_); }

  // Exact floor-toward-zero of |this| * 10^frac_digits, as a big integer.
  // Pure digit-string arithmetic; no rounding is involved.
  BigInt scaled(int frac_digits) const {
    std::string s = text_;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      s.erase(0, 1);
    }
    std::string ip = s, fp;
    if (auto d = s.find('.'); d != std::string::npos) {
      ip = s.substr(0, d);
      fp = s.substr(d + 1);
    }
    fp.resize(static_cast<std::size_t>(frac_digits), '0');  // pad or truncate
    std::string all = ip + fp;
    std::size_t nz = all.find_first_not_of('0');
    all = nz == std::string::npos ? "0" : all.substr(nz);
    BigInt v(all);
    return neg ? -v : v;
  }

  // Number of digits after the decimal point in the literal.
  int fraction_digits() const {
    auto d = text_.find('.');
    return d == std::string::npos ? 0 : static_cast<int>(text_.size() - d - 1);
  }

  // Render a Real as a decimal literal truncated toward zero after
  // `frac_digits` fractional digits (the paper's convention for coordinates).
  static Decimal truncate(const Real& r, int frac_digits) {
    std::string s = r.str(0, std::ios_base::fixed);  // full fixed expansion
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    auto d = s.find('.');
    std::string ip = d == std::string::npos ? s : s.substr(0, d);
    std::string fp = d == std::string::npos ? "" : s.substr(d + 1);
    fp.resize(static_cast<std::size_t>(frac_digits), '0');
    std::string out = (neg ? "-" : "") + ip + (frac_digits ? "." + fp : "");
    Decimal dec(out);
    if (dec.value() == 0 && neg) dec.text_ = "0" + out.substr(1);
    return dec;
  }

  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.text_ == b.text_;
  }

 private:
  std::string text_;
};

}  // namespace papertorus
