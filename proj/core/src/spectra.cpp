#include "skewperm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace skewperm {

Poly matching_polynomial(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Rat> coeff(n + 1, Rat(0));
  for (int r = 0; 2 * r <= n; ++r) {
    Int count = count_matchings(g, r);
    coeff[2 * r] = (r % 2 != 0) ? Rat(-count) : Rat(count);
  }
  return Poly(std::move(coeff));
}

namespace {

Matrix multiply(const Matrix& a, const Matrix& b) {
  const int n = a.order();
  Matrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

}  // namespace

Poly char_poly(const Matrix& a) {
  const int n = a.order();
  std::vector<Rat> c(n + 1, Rat(0));
  c[0] = 1;
  Matrix m(n);  // M_0 = 0, so M_1 = A * (M_0 + c_0 I) = A
  for (int k = 1; k <= n; ++k) {
    Matrix t = m;
    for (int i = 0; i < n; ++i) t.at(i, i) += c[k - 1];
    m = multiply(a, t);
    Rat trace(0);
    for (int i = 0; i < n; ++i) trace += m.at(i, i);
    c[k] = -trace / k;
  }
  return Poly(std::move(c));
}

namespace {

// Dense rational polynomials, highest power first; {} is the zero
// polynomial. Only used inside the squarefree machinery.
using RPoly = std::vector<Rat>;

int rdeg(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly trim(RPoly p) {
  std::size_t lead = 0;
  while (lead < p.size() && p[lead] == 0) ++lead;
  p.erase(p.begin(), p.begin() + lead);
  return p;
}

RPoly monic(RPoly p) {
  if (p.empty()) return p;
  const Rat lead = p.front();
  for (Rat& c : p) c /= lead;
  return p;
}

RPoly derive(const RPoly& p) {
  if (p.size() <= 1) return {};
  RPoly out(p.size() - 1);
  for (std::size_t k = 0; k + 1 < p.size(); ++k)
    out[k] = p[k] * Rat(static_cast<int>(p.size() - 1 - k));
  return trim(std::move(out));
}

RPoly subtract(const RPoly& a, const RPoly& b) {
  RPoly out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t k = 0; k < a.size(); ++k) out[out.size() - a.size() + k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[out.size() - b.size() + k] -= b[k];
  return trim(std::move(out));
}

std::pair<RPoly, RPoly> divmod(const RPoly& a, const RPoly& b) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  RPoly rem = a;
  RPoly quot(a.size() - b.size() + 1, Rat(0));
  for (std::size_t k = 0; k + b.size() <= rem.size(); ++k) {
    if (rem[k] == 0) continue;
    Rat q = rem[k] / b.front();
    quot[k] = q;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q * b[j];
  }
  return {trim(std::move(quot)), trim(std::move(rem))};
}

RPoly gcd_poly(RPoly a, RPoly b) {
  a = monic(trim(std::move(a)));
  b = monic(trim(std::move(b)));
  while (!b.empty()) {
    RPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return a;  // monic (or {} if both inputs were zero)
}

// Yun's squarefree decomposition of a monic polynomial: returns monic
// pairwise-coprime squarefree factors with their multiplicities, whose
// product with multiplicity reproduces the input.
std::vector<std::pair<RPoly, int>> squarefree_factors(RPoly f) {
  f = monic(trim(std::move(f)));
  std::vector<std::pair<RPoly, int>> out;
  if (rdeg(f) <= 0) return out;
  const RPoly fp = derive(f);
  RPoly u = gcd_poly(f, fp);
  RPoly v = divmod(f, u).first;   // product of the distinct roots' factors
  RPoly w = divmod(fp, u).first;
  const int cap = rdeg(f) + 1;
  for (int i = 1; rdeg(v) > 0; ++i) {
    if (i > cap) throw std::logic_error("squarefree decomposition failed to terminate");
    RPoly z = subtract(w, derive(v));
    RPoly h = gcd_poly(v, z);
    if (rdeg(h) > 0) out.emplace_back(h, i);
    v = divmod(v, h).first;
    w = divmod(z, h).first;
  }
  return out;
}

using CLD = std::complex<long double>;

CLD horner(const std::vector<long double>& c, const CLD& z) {
  CLD p(c.front());
  for (std::size_t k = 1; k < c.size(); ++k) p = p * z + c[k];
  return p;
}

// Aberth-Ehrlich with Gauss-Seidel updates on a monic polynomial with
// simple roots. Deterministic start: a circle of Cauchy-bound radius
// with a fixed phase offset (the offset keeps the start asymmetric, so
// symmetric root sets cannot trap the iteration on a saddle).
std::vector<CLD> aberth_roots(const std::vector<long double>& c, double tol) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 1) return {CLD(-c[1])};
  long double maxc = 0;
  for (std::size_t k = 1; k < c.size(); ++k) maxc = std::max(maxc, std::fabs(c[k]));
  const long double scale = 1 + maxc;
  const long double radius = 1 + maxc;
  const long double pi = std::acos(-1.0L);
  std::vector<CLD> z(n);
  for (int j = 0; j < n; ++j)
    z[j] = std::polar(radius, 2 * pi * (j + 0.25L) / n + 0.34L);

  const long double target = static_cast<long double>(tol) * scale;
  constexpr int kMaxSweeps = 220;
  int polish = 0;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    for (int j = 0; j < n; ++j) {
      const CLD pj = horner(c, z[j]);
      if (std::abs(pj) == 0) continue;
      // derivative via a second Horner pass
      CLD dp(0);
      {
        CLD p(c.front());
        for (std::size_t k = 1; k + 1 < c.size(); ++k) {
          dp = dp * z[j] + p;
          p = p * z[j] + c[k];
        }
        dp = dp * z[j] + p;
      }
      CLD newton = (dp == CLD(0)) ? CLD(1) : pj / dp;
      CLD repulse(0);
      for (int k = 0; k < n; ++k)
        if (k != j) repulse += CLD(1) / (z[j] - z[k]);
      const CLD denom = CLD(1) - newton * repulse;
      const CLD step = (std::abs(denom) < 1e-30L) ? newton : newton / denom;
      if (std::isfinite(step.real()) && std::isfinite(step.imag()))
        z[j] -= step;
      else
        z[j] *= CLD(1.0L, 0.125L);  // deterministic nudge off the bad spot
    }
    long double worst = 0;
    for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(horner(c, z[j])));
    if (worst <= target) {
      // two extra sweeps push the residual to the long-double floor
      if (++polish > 2) return z;
    } else {
      polish = 0;
    }
  }
  long double worst = 0;
  for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(horner(c, z[j])));
  if (worst <= target) return z;
  throw RootsError("root refinement stalled: residual " + std::to_string(static_cast<double>(worst)) +
                   " above target " + std::to_string(static_cast<double>(target)));
}

bool complex_before(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

RootMultiset roots(const Poly& p, double tol) {
  if (p.coefficients().front() == 0)
    throw std::invalid_argument("roots() needs a nonzero leading coefficient");
  RootMultiset out;
  if (p.degree() == 0) return out;
  for (const auto& [factor, multiplicity] : squarefree_factors(p.coefficients())) {
    std::vector<long double> c;
    c.reserve(factor.size());
    for (const Rat& x : factor) c.push_back(x.convert_to<long double>());
    const std::vector<CLD> zs = aberth_roots(c, tol);
    for (const CLD& z : zs) {
      const std::complex<double> zd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
      for (int copy = 0; copy < multiplicity; ++copy) out.values.push_back(zd);
    }
  }
  if (out.values.size() != static_cast<std::size_t>(p.degree()))
    throw std::logic_error("squarefree decomposition lost roots");
  std::sort(out.values.begin(), out.values.end(), complex_before);
  return out;
}

bool multiset_equal(const RootMultiset& a, const RootMultiset& b, double tol) {
  if (a.values.size() != b.values.size()) return false;
  const int n = static_cast<int>(a.values.size());
  if (n == 0) return true;
  // bipartite matching on the "within tol" graph; Kuhn's algorithm
  std::vector<int> match_of_b(n, -1);
  std::vector<char> visited(n);
  auto can = [&](int i, int j) { return std::abs(a.values[i] - b.values[j]) <= tol; };
  std::function<bool(int)> augment = [&](int i) -> bool {
    for (int j = 0; j < n; ++j) {
      if (visited[j] || !can(i, j)) continue;
      visited[j] = 1;
      if (match_of_b[j] < 0 || augment(match_of_b[j])) {
        match_of_b[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(i)) return false;
  }
  return true;
}

RootMultiset scale_spectrum_by_i(const RootMultiset& s) {
  RootMultiset out;
  out.values.reserve(s.values.size());
  for (const auto& z : s.values) out.values.emplace_back(-z.imag(), z.real());
  std::sort(out.values.begin(), out.values.end(), complex_before);
  return out;
}

bool bipartite_by_odd_coeffs(const Poly& p) {
  for (int k = 1; k <= p.degree(); k += 2)
    if (p.coefficient(k) != 0) return false;
  return true;
}

bool check_i_relation(const Poly& adjacency_poly, const Poly& skew_poly) {
  if (adjacency_poly.degree() != skew_poly.degree())
    throw std::invalid_argument("polynomials must have equal degree");
  for (int k = 0; k <= adjacency_poly.degree(); ++k) {
    const Rat& a = adjacency_poly.coefficient(k);
    const Rat& s = skew_poly.coefficient(k);
    switch (k % 4) {
      case 0:
        if (s != a) return false;
        break;
      case 2:
        if (s != -a) return false;
        break;
      default:  // odd k: i^k is imaginary, so both real parts must vanish
        if (a != 0 || s != 0) return false;
    }
  }
  return true;
}

}  // namespace skewperm
