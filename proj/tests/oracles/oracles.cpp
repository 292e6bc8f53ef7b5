#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::vector<int> lambda_parts(const Configuration& tau) {
  std::vector<int> parts(1, 0);
  for (std::size_t i = 1; i <= tau.size(); ++i) {
    if (tau.site(i) == 1) parts.push_back(0);
  }
  int ones_seen = 0;
  for (std::size_t i = 1; i <= tau.size(); ++i) {
    if (tau.site(i) == 1) {
      ++ones_seen;
    } else {
      for (int r = 0; r <= ones_seen; ++r) ++parts[r];
    }
  }
  return parts;
}

namespace {

// Cell (row, col) lookup into a flat filling, rows of the given lengths.
struct Grid {
  const std::vector<int>& parts;
  std::vector<int> offsets;
  std::uint64_t bits;

  Grid(const std::vector<int>& p, std::uint64_t b) : parts(p), bits(b) {
    int acc = 0;
    for (int len : parts) {
      offsets.push_back(acc);
      acc += len;
    }
  }
  int at(std::size_t r, int c) const { return static_cast<int>((bits >> (offsets[r] + c)) & 1u); }
};

bool valid(const Grid& g) {
  const std::size_t rows = g.parts.size();
  const int cols = rows ? g.parts[0] : 0;
  for (int c = 0; c < cols; ++c) {
    bool has_one = false;
    for (std::size_t r = 0; r < rows && c < g.parts[r]; ++r) has_one = has_one || g.at(r, c) == 1;
    if (!has_one) return false;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (int c = 0; c < g.parts[r]; ++c) {
      if (g.at(r, c) != 0) continue;
      bool above = false;
      bool left = false;
      for (std::size_t rr = 0; rr < r; ++rr) above = above || g.at(rr, c) == 1;
      for (int cc = 0; cc < c; ++cc) left = left || g.at(r, cc) == 1;
      if (above && left) return false;
    }
  }
  return true;
}

Polynomial monomial_of(const Grid& g) {
  const std::size_t rows = g.parts.size();
  const int cols = rows ? g.parts[0] : 0;
  int ones = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (int c = 0; c < g.parts[r]; ++c) ones += g.at(r, c);
  }
  int first = 0;
  for (int c = 0; c < cols; ++c) first += g.at(0, c);
  int unrestricted = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    bool restricted = false;
    for (int c = 0; c < g.parts[r]; ++c) {
      if (g.at(r, c) != 0) continue;
      for (std::size_t rr = 0; rr < r; ++rr) restricted = restricted || g.at(rr, c) == 1;
    }
    if (!restricted) ++unrestricted;
  }
  return Polynomial::monomial({ones - cols, first, unrestricted - 1});
}

}  // namespace

Polynomial tableaux_by_brute_force(const std::vector<int>& parts) {
  const int boxes = std::accumulate(parts.begin(), parts.end(), 0);
  Polynomial sum;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << boxes); ++bits) {
    const Grid g(parts, bits);
    if (valid(g)) sum += monomial_of(g);
  }
  return sum;
}

std::size_t count_tableaux_by_brute_force(const std::vector<int>& parts) {
  const int boxes = std::accumulate(parts.begin(), parts.end(), 0);
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << boxes); ++bits) {
    if (valid(Grid(parts, bits))) ++count;
  }
  return count;
}

Polynomial motzkin_by_brute_force(const Configuration& tau) {
  const std::size_t n = tau.size();
  Polynomial sum;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 4;
  // Digit d of code: 0 = N, 1 = S, 2 = E, 3 = Ebar.
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    int h = 0;
    bool ok = true;
    Polynomial w(1);
    for (std::size_t i = 1; i <= n && ok; ++i) {
      const int d = static_cast<int>(c % 4);
      c /= 4;
      const bool up_or_level = d == 0 || d == 2;
      if (up_or_level != (tau.site(i) == 1)) ok = false;
      if (d == 0) ++h;
      if (d == 1) --h;
      if (h < 0) ok = false;
      Polynomial bracket;
      for (int j = 0; j <= h; ++j) bracket += Polynomial::q(j);
      w *= bracket;
    }
    if (ok && h == 0) sum += w;
  }
  return sum;
}

namespace {

using Matrix = std::vector<std::vector<Polynomial>>;

Polynomial binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Polynomial();
  pasep::Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Polynomial(r);
}

Polynomial bracket(long i) {
  Polynomial p;
  for (long j = 0; j < i; ++j) p += Polynomial::q(static_cast<int>(j));
  return p;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t m = x.size();
  Matrix z(m, std::vector<Polynomial>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) z[i][j] += x[i][k] * y[k][j];
    }
  }
  return z;
}

}  // namespace

Polynomial naive_ansatz(bool tableau, const Configuration& tau, std::size_t dim) {
  const std::size_t m = dim;
  Matrix d(m, std::vector<Polynomial>(m));
  Matrix e(m, std::vector<Polynomial>(m));
  for (std::size_t r = 0; r < m; ++r) {
    const long i = static_cast<long>(r) + 1;
    for (std::size_t s = 0; s < m; ++s) {
      const long j = static_cast<long>(s) + 1;
      if (tableau) {
        if (j == i + 1) d[r][s] = Polynomial::b();
        if (j <= i) {
          Polynomial inner = Polynomial::a() * Polynomial::q(static_cast<int>(j - 1)) * binom(i - 1, j - 1);
          for (long t = 0; t <= j - 2; ++t) inner += binom(i - j + t, t) * Polynomial::q(static_cast<int>(t));
          e[r][s] = Polynomial::b(static_cast<int>(j - i)) * inner;
        }
      } else {
        if (j == i) d[r][s] = e[r][s] = bracket(i);
        if (j == i + 1) d[r][s] = bracket(i + 1);
        if (i == j + 1) e[r][s] = bracket(j);
      }
    }
  }
  Matrix product(m, std::vector<Polynomial>(m));
  for (std::size_t r = 0; r < m; ++r) product[r][r] = Polynomial(1);
  for (std::size_t i = 1; i <= tau.size(); ++i) product = multiply(product, tau.site(i) ? d : e);
  Polynomial result;
  for (std::size_t s = 0; s < m; ++s) {
    if (tableau || s == 0) result += product[0][s];
  }
  return result;
}

Rational stationarity_residual(const pasep::TransitionMatrix& p, const std::vector<Rational>& v) {
  Rational worst = 0;
  for (std::size_t y = 0; y < v.size(); ++y) {
    Rational s = 0;
    for (std::size_t x = 0; x < v.size(); ++x) s += v[x] * p.p[x][y];
    Rational diff = abs(s - v[y]);
    if (diff > worst) worst = diff;
  }
  return worst;
}

std::vector<std::vector<int>> all_permutations(std::size_t m) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<bool> used(m + 1, false);
  auto extend = [&](auto&& self) -> void {
    if (current.size() == m) {
      out.push_back(current);
      return;
    }
    for (int v = 1; v <= static_cast<int>(m); ++v) {
      if (used[v]) continue;
      used[v] = true;
      current.push_back(v);
      self(self);
      current.pop_back();
      used[v] = false;
    }
  };
  extend(extend);
  return out;
}

}  // namespace oracle
