#include "pasep/ansatz.hpp"

namespace pasep {

std::string to_string(AnsatzKind kind) { return kind == AnsatzKind::Tableau ? "tableau" : "motzkin"; }

TruncatedMatrix::TruncatedMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw InvalidParameter("TruncatedMatrix: dimension must be positive");
}

std::size_t TruncatedMatrix::index(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) {
    throw std::out_of_range("TruncatedMatrix: index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside 1.." + std::to_string(dim_));
  }
  return (i - 1) * dim_ + (j - 1);
}

std::vector<Polynomial> TruncatedMatrix::left_multiply(const std::vector<Polynomial>& row) const {
  std::vector<Polynomial> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (row[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto& m = entries_[i * dim_ + j];
      if (!m.is_zero()) out[j].add_product(row[i], m);
    }
  }
  return out;
}

std::vector<Polynomial> TruncatedMatrix::right_multiply(const std::vector<Polynomial>& column) const {
  std::vector<Polynomial> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto& m = entries_[i * dim_ + j];
      if (!m.is_zero() && !column[j].is_zero()) out[i].add_product(m, column[j]);
    }
  }
  return out;
}

TruncatedMatrix operator*(const TruncatedMatrix& x, const TruncatedMatrix& y) {
  const std::size_t m = x.dim();
  TruncatedMatrix r(m);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t k = 1; k <= m; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 1; j <= m; ++j) {
        if (!y(k, j).is_zero()) r(i, j).add_product(x(i, k), y(k, j));
      }
    }
  }
  return r;
}

TruncatedMatrix operator+(const TruncatedMatrix& x, const TruncatedMatrix& y) {
  TruncatedMatrix r = x;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += y.entries_[k];
  return r;
}

TruncatedMatrix operator-(const TruncatedMatrix& x, const TruncatedMatrix& y) {
  TruncatedMatrix r = x;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= y.entries_[k];
  return r;
}

TruncatedMatrix operator*(const Polynomial& s, const TruncatedMatrix& x) {
  TruncatedMatrix r = x;
  for (auto& e : r.entries_) e = s * e;
  return r;
}

Polynomial qint(int i) {
  if (i < 0) throw InvalidParameter("qint: negative argument " + std::to_string(i));
  Polynomial p;
  for (int j = 0; j < i; ++j) p += Polynomial::q(j);
  return p;
}

namespace {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// e_{ij} = b^{j-i} (a q^{j-1} C(i-1, j-1) + sum_{r=0}^{j-2} C(i-j+r, r) q^r) for j <= i.
Polynomial tableau_e_entry(std::size_t i, std::size_t j) {
  const long li = static_cast<long>(i);
  const long lj = static_cast<long>(j);
  Polynomial inner = Polynomial::monomial({static_cast<int>(j) - 1, 1, 0}, binomial(li - 1, lj - 1));
  for (long r = 0; r <= lj - 2; ++r) {
    inner += Polynomial::monomial({static_cast<int>(r), 0, 0}, binomial(li - lj + r, r));
  }
  return Polynomial::b(static_cast<int>(j) - static_cast<int>(i)) * inner;
}

}  // namespace

TruncatedMatrix build(AnsatzKind kind, Generator which, std::size_t dim) {
  TruncatedMatrix m(dim);
  for (std::size_t i = 1; i <= dim; ++i) {
    const int ii = static_cast<int>(i);
    if (kind == AnsatzKind::Tableau) {
      if (which == Generator::D) {
        if (i < dim) m(i, i + 1) = Polynomial::b();
      } else {
        for (std::size_t j = 1; j <= i; ++j) m(i, j) = tableau_e_entry(i, j);
      }
    } else {
      m(i, i) = qint(ii);
      if (which == Generator::D) {
        if (i < dim) m(i, i + 1) = qint(ii + 1);
      } else {
        if (i < dim) m(i + 1, i) = qint(ii);
      }
    }
  }
  return m;
}

AnsatzSection AnsatzSection::build(AnsatzKind kind, std::size_t dim) {
  AnsatzSection s{kind, pasep::build(kind, Generator::D, dim), pasep::build(kind, Generator::E, dim),
                  std::vector<Polynomial>(dim), std::vector<Polynomial>(dim), Polynomial(1), Polynomial(1)};
  s.w[0] = 1;
  if (kind == AnsatzKind::Tableau) {
    for (auto& x : s.v) x = 1;
    s.dv_eigenvalue = Polynomial::b();
    s.we_eigenvalue = Polynomial::a();
  } else {
    s.v[0] = 1;
  }
  return s;
}

std::size_t default_dim(std::size_t n) { return n + 2; }

AnsatzEvaluator::AnsatzEvaluator(AnsatzKind kind, std::size_t dim)
    : AnsatzEvaluator(AnsatzSection::build(kind, dim)) {}

AnsatzEvaluator::AnsatzEvaluator(AnsatzSection section)
    : section_(std::move(section)), sum_(section_.d + section_.e) {}

void AnsatzEvaluator::require_dim(std::size_t n) const {
  if (section_.dim() < default_dim(n)) {
    throw TruncationError("truncation dimension " + std::to_string(section_.dim()) + " is below " +
                          std::to_string(default_dim(n)) + " required for " + std::to_string(n) + " sites");
  }
}

std::vector<Polynomial> AnsatzEvaluator::top_row(const Configuration& tau) const {
  require_dim(tau.size());
  std::vector<Polynomial> row = section_.w;
  for (auto bit : tau.bits()) row = (bit ? section_.d : section_.e).left_multiply(row);
  return row;
}

namespace {

Polynomial dot(const std::vector<Polynomial>& row, const std::vector<Polynomial>& column) {
  Polynomial s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_zero() && !column[i].is_zero()) s.add_product(row[i], column[i]);
  }
  return s;
}

}  // namespace

Polynomial AnsatzEvaluator::eval(const Configuration& tau) const { return dot(top_row(tau), section_.v); }

Polynomial AnsatzEvaluator::partition_function(std::size_t n) const {
  require_dim(n);
  std::vector<Polynomial> row = section_.w;
  for (std::size_t i = 0; i < n; ++i) row = sum_.left_multiply(row);
  return dot(row, section_.v);
}

Polynomial ansatz_eval(AnsatzKind kind, const Configuration& tau, std::optional<std::size_t> dim) {
  return AnsatzEvaluator(kind, dim.value_or(default_dim(tau.size()))).eval(tau);
}

Polynomial partition_function(AnsatzKind kind, std::size_t n) {
  return AnsatzEvaluator(kind, default_dim(n)).partition_function(n);
}

std::vector<Polynomial> top_row(const Configuration& tau, std::optional<std::size_t> dim) {
  return AnsatzEvaluator(AnsatzKind::Tableau, dim.value_or(default_dim(tau.size()))).top_row(tau);
}

RelationReport check_relations(const AnsatzSection& s) {
  const std::size_t m = s.dim();
  if (m < 2) throw InvalidParameter("check_relations: dimension must be at least 2");
  const TruncatedMatrix lhs = s.d * s.e - Polynomial::q() * (s.e * s.d);
  const TruncatedMatrix rhs = s.d + s.e;
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j < m; ++j) {
      if (lhs(i, j) != rhs(i, j)) {
        return {false, "(DE - qED)(" + std::to_string(i) + "," + std::to_string(j) + ") = " + lhs(i, j).to_string() +
                           " but (D + E) entry is " + rhs(i, j).to_string()};
      }
    }
  }
  const auto dv = s.d.right_multiply(s.v);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (dv[i] != s.dv_eigenvalue * s.v[i]) {
      return {false, "(DV)_" + std::to_string(i + 1) + " = " + dv[i].to_string() + ", expected " +
                         (s.dv_eigenvalue * s.v[i]).to_string()};
    }
  }
  const auto we = s.e.left_multiply(s.w);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    if (we[j] != s.we_eigenvalue * s.w[j]) {
      return {false, "(WE)_" + std::to_string(j + 1) + " = " + we[j].to_string() + ", expected " +
                         (s.we_eigenvalue * s.w[j]).to_string()};
    }
  }
  return {};
}

RelationReport check_relations(AnsatzKind kind, std::size_t dim) { return check_relations(AnsatzSection::build(kind, dim)); }

}  // namespace pasep
