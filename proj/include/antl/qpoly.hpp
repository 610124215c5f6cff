#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace antl {

/// Exact polynomial in q with integer coefficients; the scalars of the
/// particle-configuration representation. Terms are kept sorted by
/// exponent with no zero coefficients.
class QPoly {
public:
  QPoly() = default;

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return monomial(1, 0); }
  static QPoly q() { return monomial(1, 1); }
  static QPoly monomial(long long coeff, int exp) {
    if (exp < 0) throw std::invalid_argument("QPoly: negative exponent");
    QPoly p;
    if (coeff != 0) p.terms_.emplace_back(exp, coeff);
    return p;
  }

  const std::vector<std::pair<int, long long>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of q^exp.
  long long coeff(int exp) const {
    for (const auto& [e, c] : terms_)
      if (e == exp) return c;
    return 0;
  }

  /// If the polynomial is c*q^e, returns (c, e).
  bool is_monomial() const { return terms_.size() == 1; }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly out;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        out.terms_.push_back(b.terms_[j++]);
      } else {
        long long c = a.terms_[i].second + b.terms_[j].second;
        if (c != 0) out.terms_.emplace_back(a.terms_[i].first, c);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend QPoly operator-(const QPoly& a) {
    QPoly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out = out + monomial(ca * cb, ea + eb);
    return out;
  }

  friend QPoly operator*(long long c, const QPoly& a) {
    return monomial(c, 0) * a;
  }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
  friend bool operator<(const QPoly& a, const QPoly& b) {
    return a.terms_ < b.terms_;
  }

private:
  std::vector<std::pair<int, long long>> terms_;
};

/// "2·q^3 + -1·q^1"; the zero polynomial is "0".
inline std::string format_qpoly(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += std::to_string(it->second) + "·q^" + std::to_string(it->first);
  }
  return out;
}

}  // namespace antl
