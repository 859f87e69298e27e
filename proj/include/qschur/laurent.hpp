#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "qschur/errors.hpp"

namespace qschur {

using bigint = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in one variable q with arbitrary-precision
// integer coefficients.  Invariants: no stored coefficient is zero; the
// zero polynomial is the empty map.  Values are immutable in spirit: all
// operations return new values and the mutating operators only rebuild
// the term map.
class laurent {
 public:
  laurent() = default;

  static laurent constant(bigint c) { return monomial(std::move(c), 0); }

  static laurent monomial(bigint c, int exp) {
    laurent f;
    if (c != 0) f.terms_.emplace(exp, std::move(c));
    return f;
  }

  // q^exp with coefficient one.
  static laurent q(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }

  const std::map<int, bigint>& terms() const { return terms_; }

  bigint coefficient(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? bigint(0) : it->second;
  }

  int min_degree() const {
    if (is_zero()) throw zero_polynomial_error();
    return terms_.begin()->first;
  }

  int max_degree() const {
    if (is_zero()) throw zero_polynomial_error();
    return terms_.rbegin()->first;
  }

  laurent& operator+=(const laurent& g) {
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
  }

  laurent& operator-=(const laurent& g) {
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
  }

  friend laurent operator+(laurent f, const laurent& g) { return f += g; }
  friend laurent operator-(laurent f, const laurent& g) { return f -= g; }

  laurent operator-() const {
    laurent f;
    for (const auto& [e, c] : terms_) f.terms_.emplace(e, -c);
    return f;
  }

  friend laurent operator*(const laurent& f, const laurent& g) {
    laurent h;
    for (const auto& [ef, cf] : f.terms_)
      for (const auto& [eg, cg] : g.terms_) h.add_term(ef + eg, cf * cg);
    return h;
  }

  laurent& operator*=(const laurent& g) { return *this = *this * g; }

  friend laurent operator*(const bigint& c, const laurent& f) {
    laurent h;
    if (c != 0)
      for (const auto& [e, fc] : f.terms_) h.terms_.emplace(e, c * fc);
    return h;
  }

  bool operator==(const laurent&) const = default;

  // The bar involution q ↦ q⁻¹: negates every exponent.
  laurent bar() const {
    laurent f;
    for (const auto& [e, c] : terms_) f.terms_.emplace(-e, c);
    return f;
  }

  bool is_bar_invariant() const { return *this == bar(); }

  // Evaluation at q = 1, a ring homomorphism to the integers.
  bigint evaluate_at_one() const {
    bigint s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool all_coefficients_nonnegative() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  // Canonical text form: terms sorted by ascending exponent,
  // e.g. "q^-2 + 3 + 2*q^4"; the zero polynomial prints as "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bigint a = c;
      if (first) {
        if (a < 0) {
          out << '-';
          a = -a;
        }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (e == 0) {
        out << a;
      } else {
        if (a != 1) out << a << '*';
        out << 'q';
        if (e != 1) out << '^' << e;
      }
      first = false;
    }
    return out.str();
  }

  static laurent from_string(std::string_view text) {
    laurent f;
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size()) throw parse_error("empty Laurent polynomial");
    bool first = true;
    while (i < text.size()) {
      int sign = 1;
      skip_ws();
      if (!first || text[i] == '+' || text[i] == '-') {
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
          throw parse_error("expected '+' or '-' in Laurent polynomial: " + std::string(text));
        if (text[i] == '-') sign = -1;
        ++i;
        skip_ws();
      }
      bigint coeff = 1;
      bool saw_number = false;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        coeff = bigint(std::string(text.substr(i, j - i)));
        saw_number = true;
        i = j;
        skip_ws();
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip_ws();
        }
      }
      int exp = 0;
      if (i < text.size() && text[i] == 'q') {
        ++i;
        exp = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          size_t j = i;
          if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
          size_t k = j;
          while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
          if (k == j) throw parse_error("missing exponent after '^': " + std::string(text));
          exp = std::stoi(std::string(text.substr(i, k - i)));
          i = k;
        }
      } else if (!saw_number) {
        throw parse_error("expected term in Laurent polynomial: " + std::string(text));
      }
      f.add_term(exp, sign * coeff);
      first = false;
      skip_ws();
    }
    return f;
  }

 private:
  void add_term(int exp, const bigint& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, bigint> terms_;
};

inline laurent operator*(const laurent& f, const bigint& c) { return c * f; }

}  // namespace qschur
