#include "skewperm/poly.hpp"

#include <stdexcept>

namespace skewperm {

Poly::Poly(std::vector<Rat> coeffs) : a_(std::move(coeffs)) {
  if (a_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
}

const Rat& Poly::coefficient(int k) const {
  if (k < 0 || k > degree()) throw std::invalid_argument("coefficient index out of range");
  return a_[k];
}

Poly Poly::operator*(const Poly& other) const {
  std::vector<Rat> out(a_.size() + other.a_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] == 0) continue;
    for (std::size_t j = 0; j < other.a_.size(); ++j) out[i + j] += a_[i] * other.a_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  if (degree() == 0) return Poly(std::vector<Rat>{Rat(0)});
  std::vector<Rat> out(a_.size() - 1);
  for (std::size_t k = 0; k + 1 < a_.size(); ++k)
    out[k] = a_[k] * Rat(static_cast<int>(a_.size() - 1 - k));
  return Poly(std::move(out));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = a_.front();
  for (std::size_t k = 1; k < a_.size(); ++k) acc = acc * x + a_[k];
  return acc;
}

std::complex<long double> Poly::eval(const std::complex<long double>& z) const {
  std::complex<long double> acc(a_.front().convert_to<long double>());
  for (std::size_t k = 1; k < a_.size(); ++k)
    acc = acc * z + std::complex<long double>(a_[k].convert_to<long double>());
  return acc;
}

std::string Poly::pretty() const {
  std::string out;
  const int n = degree();
  for (int k = 0; k <= n; ++k) {
    const Rat& c = a_[k];
    if (c == 0) continue;
    const int power = n - k;
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || power == 0) out += rat_string(mag);
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> coefficient_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const Rat& c : p.coefficients()) out.push_back(rat_string(c));
  return out;
}

}  // namespace skewperm
