#pragma once

// Sparse multivariate polynomials over Z in the variables w, x, y, z, t.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ribbon {

using BigInt = boost::multiprecision::cpp_int;

enum class Var : std::size_t { W = 0, X = 1, Y = 2, Z = 3, T = 4 };

inline constexpr std::size_t kVarCount = 5;
inline constexpr std::array<char, kVarCount> kVarNames{'w', 'x', 'y', 'z', 't'};

using Exponents = std::array<std::uint32_t, kVarCount>;

/// Integer values for some subset of the variables. Unassigned variables stay symbolic.
class Assignment {
 public:
  Assignment() = default;

  Assignment& set(Var v, BigInt value) {
    values_[static_cast<std::size_t>(v)] = std::move(value);
    return *this;
  }
  const std::optional<BigInt>& get(Var v) const { return values_[static_cast<std::size_t>(v)]; }
  const std::optional<BigInt>& operator[](std::size_t i) const { return values_[i]; }

  static Assignment wxyz(long long w, long long x, long long y, long long z) {
    Assignment a;
    a.set(Var::W, w).set(Var::X, x).set(Var::Y, y).set(Var::Z, z);
    return a;
  }
  static Assignment all(long long w, long long x, long long y, long long z, long long t) {
    Assignment a = wxyz(w, x, y, z);
    a.set(Var::T, t);
    return a;
  }

 private:
  std::array<std::optional<BigInt>, kVarCount> values_{};
};

class MultiPoly {
 public:
  // Descending lexicographic order on (w, x, y, z, t): the canonical print order.
  struct DescLex {
    bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
  };
  using Terms = std::map<Exponents, BigInt, DescLex>;

  MultiPoly() = default;
  MultiPoly(long long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Exponents{}, BigInt(c));
  }
  explicit MultiPoly(BigInt c) {
    if (c != 0) terms_.emplace(Exponents{}, std::move(c));
  }

  static MultiPoly var(Var v, std::uint32_t power = 1) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = power;
    return monomial(e, 1);
  }
  static MultiPoly monomial(const Exponents& e, BigInt c) {
    MultiPoly p;
    p.add_term(e, std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::uint32_t degree(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
    return d;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return MultiPoly{} - a; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  /// Substitutes integers for the assigned variables.
  MultiPoly evaluate(const Assignment& at) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      BigInt coeff = c;
      Exponents rest = e;
      for (std::size_t i = 0; i < kVarCount; ++i) {
        if (at[i] && e[i] > 0) {
          coeff *= boost::multiprecision::pow(*at[i], e[i]);
          rest[i] = 0;
        }
      }
      r.add_term(rest, coeff);
    }
    return r;
  }

  /// Constant term value; only meaningful once every variable has been evaluated away.
  BigInt constant() const { return coefficient(Exponents{}); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
  }

  /// Replaces w by (w - x - y - z) and expands.
  MultiPoly substitute_w_shift() const {
    const MultiPoly shifted = var(Var::W) - var(Var::X) - var(Var::Y) - var(Var::Z);
    std::vector<MultiPoly> powers{MultiPoly(1)};
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      const std::size_t k = e[0];
      while (powers.size() <= k) powers.push_back(powers.back() * shifted);
      Exponents rest = e;
      rest[0] = 0;
      r += monomial(rest, c) * powers[k];
    }
    return r;
  }

  /// Canonical text: terms in descending lex order of (w,x,y,z,t), e.g. "w*t + x*t + y*t^2 + z*t".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool wrote = false;
      if (mag != 1 || e == Exponents{}) {
        out << mag;
        wrote = true;
      }
      for (std::size_t i = 0; i < kVarCount; ++i) {
        if (e[i] == 0) continue;
        if (wrote) out << "*";
        out << kVarNames[i];
        if (e[i] > 1) out << "^" << e[i];
        wrote = true;
      }
    }
    return out.str();
  }

 private:
  Terms terms_;
};

inline MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
inline MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
inline MultiPoly poly_eval(const MultiPoly& p, const Assignment& at) { return p.evaluate(at); }
inline MultiPoly poly_subst_w(const MultiPoly& p) { return p.substitute_w_shift(); }

inline MultiPoly t_power(std::uint32_t n) { return MultiPoly::var(Var::T, n); }

/// Builds a polynomial in t from coefficients c[0] + c[1] t + c[2] t^2 + ...
inline MultiPoly poly_in_t(const std::vector<long long>& coeffs) {
  MultiPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.add_term(Exponents{0, 0, 0, 0, static_cast<std::uint32_t>(i)}, BigInt(coeffs[i]));
  }
  return p;
}

}  // namespace ribbon
