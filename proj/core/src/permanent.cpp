#include "skewperm/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace skewperm {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

struct ScaledMatrix {
  int n = 0;
  Int denom = 1;        // common denominator of all entries
  std::vector<Int> a;   // denom * original entries
};

ScaledMatrix scale_to_integers(const Matrix& m) {
  ScaledMatrix s;
  s.n = m.order();
  for (const Rat& x : m.entries()) s.denom = lcm(s.denom, Int(denominator(x)));
  s.a.reserve(m.entries().size());
  for (const Rat& x : m.entries()) s.a.push_back(Int(numerator(x * Rat(s.denom))));
  return s;
}

Rat unscale(const Int& value, const Int& denom, int n) {
  if (denom == 1) return Rat(value);
  return Rat(value, pow(denom, static_cast<unsigned>(n)));
}

__int128 to_int128(const Int& v) {
  const bool neg = v < 0;
  Int a = neg ? Int(-v) : v;
  const std::uint64_t lo = static_cast<std::uint64_t>(a & Int(~std::uint64_t(0)));
  const std::uint64_t hi = static_cast<std::uint64_t>(a >> 64);
  const unsigned __int128 u = (static_cast<unsigned __int128>(hi) << 64) | lo;
  return neg ? -static_cast<__int128>(u) : static_cast<__int128>(u);
}

Int from_int128(__int128 v) {
  const bool neg = v < 0;
  const unsigned __int128 u = neg ? 0 - static_cast<unsigned __int128>(v)
                                  : static_cast<unsigned __int128>(v);
  Int r = Int(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r |= Int(static_cast<std::uint64_t>(u));
  return neg ? Int(-r) : r;
}

// Sum of |term| over any of the expansions below is at most the product
// of absolute row sums; with the 2^n inclusion-exclusion terms on top
// everything stays below 2^(bits + n + 2). Entry magnitudes are bounded
// by their row sum, so the same test covers them.
bool fits_int128(const ScaledMatrix& s) {
  Int bound = 1;
  for (int i = 0; i < s.n; ++i) {
    Int row = 0;
    for (int j = 0; j < s.n; ++j) row += abs(s.a[static_cast<std::size_t>(i) * s.n + j]);
    if (row > 1) bound *= row;
  }
  return msb(bound) + 1 + s.n + 2 <= 126;
}

std::vector<__int128> entries_as_int128(const std::vector<Int>& v) {
  std::vector<__int128> out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(to_int128(x));
  return out;
}

template <typename T>
T permutation_sum(int n, const std::vector<T>& a) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  T acc(0);
  do {
    T prod(1);
    for (int i = 0; i < n; ++i) {
      prod *= a[static_cast<std::size_t>(i) * n + p[i]];
      if (prod == 0) break;
    }
    acc += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

template <typename T>
T ryser_sum(int n, const std::vector<T>& a) {
  std::vector<T> rowsum(n, T(0));
  T acc(0);
  int pop = 0;
  const std::uint64_t full = std::uint64_t(1) << n;
  for (std::uint64_t t = 1; t < full; ++t) {
    const int j = std::countr_zero(t);
    const std::uint64_t gray = t ^ (t >> 1);
    if ((gray >> j) & 1) {
      for (int i = 0; i < n; ++i) rowsum[i] += a[static_cast<std::size_t>(i) * n + j];
      ++pop;
    } else {
      for (int i = 0; i < n; ++i) rowsum[i] -= a[static_cast<std::size_t>(i) * n + j];
      --pop;
    }
    T prod(1);
    bool zero = false;
    for (int i = 0; i < n; ++i) {
      if (rowsum[i] == 0) {
        zero = true;
        break;
      }
      prod *= rowsum[i];
    }
    if (zero) continue;
    // sign (-1)^(n - |S|), with |S| = pop
    if ((pop ^ n) & 1)
      acc -= prod;
    else
      acc += prod;
  }
  return acc;
}

// Sum over cycle covers of the digraph with arc weights a[v][w]. Each
// cover is built cycle by cycle, every cycle rooted at its smallest
// vertex, so each permutation contributes exactly once.
template <typename T>
struct CoverSearch {
  int n;
  const std::vector<T>& a;
  bool even_only;
  std::vector<char> used;
  T total{0};

  CoverSearch(int n, const std::vector<T>& a, bool even_only)
      : n(n), a(a), even_only(even_only), used(n, 0) {}

  const T& entry(int v, int w) const { return a[static_cast<std::size_t>(v) * n + w]; }

  void cover(int from, const T& factor) {
    int s = from;
    while (s < n && used[s]) ++s;
    if (s == n) {
      total += factor;
      return;
    }
    used[s] = 1;
    if (!even_only && entry(s, s) != 0) cover(s + 1, T(factor * entry(s, s)));
    walk(s, s, factor, 1);
    used[s] = 0;
  }

  // Extends the directed path s -> ... -> v over `len` vertices; closing
  // back to s yields a cycle of length len + 1.
  void walk(int s, int v, const T& factor, int len) {
    for (int w = s + 1; w < n; ++w) {
      if (used[w] || entry(v, w) == 0) continue;
      T f2(factor * entry(v, w));
      used[w] = 1;
      if ((!even_only || (len + 1) % 2 == 0) && entry(w, s) != 0)
        cover(s + 1, T(f2 * entry(w, s)));
      walk(s, w, f2, len + 1);
      used[w] = 0;
    }
  }
};

template <typename T>
T cover_sum(int n, const std::vector<T>& a, bool even_only) {
  CoverSearch<T> search(n, a, even_only);
  search.cover(0, T(1));
  return search.total;
}

void ryser_self_test() {
  static const bool ok = [] {
    const std::vector<Int> all_ones(4, Int(1));
    return ryser_sum<Int>(2, all_ones) == 2;
  }();
  if (!ok) throw std::logic_error("inclusion-exclusion self-test failed: per(J_2) != 2");
}

Rat run_scaled(const Matrix& m, auto&& engine) {
  ScaledMatrix s = scale_to_integers(m);
  Int result = fits_int128(s) ? from_int128(engine(s.n, entries_as_int128(s.a)))
                              : engine(s.n, s.a);
  return unscale(result, s.denom, s.n);
}

}  // namespace

Rat permanent_naive(const Matrix& a) {
  if (a.order() > 10)
    throw std::invalid_argument("permanent_naive refuses order > 10; use permanent_ryser");
  if (a.order() == 0) return Rat(1);
  return run_scaled(a, [](int n, const auto& e) { return permutation_sum(n, e); });
}

Rat permanent_ryser(const Matrix& a) {
  if (a.order() > 62) throw std::invalid_argument("permanent_ryser supports order <= 62");
  if (a.order() == 0) return Rat(1);
  ryser_self_test();
  return run_scaled(a, [](int n, const auto& e) { return ryser_sum(n, e); });
}

Rat permanent_skew_even(const SkewMatrix& a) {
  if (a.order() % 2 != 0) return Rat(0);
  if (a.order() == 0) return Rat(1);
  return run_scaled(a.matrix(), [](int n, const auto& e) { return cover_sum(n, e, true); });
}

Rat permanent_cycle_cover(const Matrix& a) {
  if (a.order() == 0) return Rat(1);
  return run_scaled(a, [](int n, const auto& e) { return cover_sum(n, e, false); });
}

Poly perm_poly_direct(const Matrix& a) {
  const int n = a.order();
  if (n > 62) throw std::invalid_argument("perm_poly_direct supports order <= 62");
  std::vector<Rat> coeff(n + 1, Rat(0));
  coeff[0] = 1;
  std::vector<int> idx;
  for (int k = 1; k <= n; ++k) {
    Rat sum(0);
    // k-subsets in colex order = increasing value of the index mask
    std::uint64_t mask = (std::uint64_t(1) << k) - 1;
    const std::uint64_t limit = std::uint64_t(1) << n;
    while (mask < limit) {
      idx.clear();
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
        idx.push_back(std::countr_zero(rest));
      sum += permanent_ryser(a.principal_submatrix(idx));
      const std::uint64_t c = mask & (0 - mask);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
    coeff[k] = (k % 2 != 0) ? Rat(-sum) : sum;
  }
  return Poly(std::move(coeff));
}

}  // namespace skewperm
