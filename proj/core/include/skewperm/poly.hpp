#pragma once

#include <complex>
#include <string>
#include <vector>

#include "skewperm/arith.hpp"

namespace skewperm {

// Univariate polynomial with exact rational coefficients, stored highest
// power first: coefficient(k) multiplies x^(degree - k). Polynomials
// produced from an n-vertex graph or order-n matrix are monic of degree
// n, so coefficient(k) matches the usual a_k subscript convention.
class Poly {
 public:
  // The constant 1 (the polynomial of the empty graph).
  Poly() : a_{Rat(1)} {}
  // Coefficients highest power first; must be non-empty. Leading zeros
  // are kept as given, so the vector length fixes the degree.
  explicit Poly(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(a_.size()) - 1; }
  const Rat& coefficient(int k) const;
  const std::vector<Rat>& coefficients() const { return a_; }
  bool is_monic() const { return a_.front() == 1; }

  Poly operator*(const Poly& other) const;
  Poly derivative() const;
  Rat eval(const Rat& x) const;
  std::complex<long double> eval(const std::complex<long double>& z) const;

  // Human-readable form, e.g. "x^4 - 4x^2" or "x^3 + 3x - 2".
  std::string pretty() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Rat> a_;
};

// Exact decimal-free coefficient strings highest power first, e.g.
// {"1", "0", "-4", "0", "0"}; the JSON form of a polynomial.
std::vector<std::string> coefficient_strings(const Poly& p);

}  // namespace skewperm
