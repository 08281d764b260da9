#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bsw/poly/ring.hpp"

namespace bsw::poly {

using Rational = mpq_class;

struct Term {
  ExponentVector monomial;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coeff == b.coeff;
  }
};

/// Sparse polynomial with exact rational coefficients.  Terms are kept in
/// strictly descending monomial order of the ring, with no zero coefficients,
/// so structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;  // detached zero; only useful as a placeholder
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, ExponentVector m, Rational c = 1);
  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  /// Leading data; precondition: nonzero.
  const Term& leading_term() const;
  const ExponentVector& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  Polynomial scaled(const Rational& c) const;
  /// this * c * x^m
  Polynomial mul_term(const ExponentVector& m, const Rational& c) const;
  /// this - c * x^m * q, without materializing the product.
  Polynomial sub_mul_term(const ExponentVector& m, const Rational& c, const Polynomial& q) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial monic() const;

  /// Canonical text: descending terms, reduced fractions, `3/2*x^2*y - z`.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& q) const;

  Ring ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

struct WeightedDegreeInfo {
  long min_degree;
  long max_degree;
  bool is_quasi_homogeneous;
};

/// Smallest and largest weighted degree among the terms of a nonzero
/// polynomial.  Throws ValidationError for the zero polynomial.
WeightedDegreeInfo weighted_degree_info(const Polynomial& p);

enum class ArithKind { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithKind kind);

/// Parses `3/2*x^2*y - (z+1)^2` style text.  Identifiers resolve to ring
/// variables first and then to entries of `bindings`.  Throws SyntaxError with
/// a 1-based column on failure.
Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                            const std::map<std::string, Polynomial>* bindings = nullptr);

std::string rational_to_string(const Rational& q);

/// d p / d z_var.
Polynomial partial_derivative(const Polynomial& p, std::size_t var);

}  // namespace bsw::poly
