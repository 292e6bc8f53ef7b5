#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pasep/errors.hpp"
#include "pasep/poly.hpp"
#include "pasep/shapes.hpp"

namespace pasep {

/// Which solution of DE - qED = D + E, DV = bV, WE = aW to use.
///  Tableau: D1/E1 with W = (1,0,0,...), V = (1,1,1,...). E1 has entries in 1/b, but every
///           product W M V is a polynomial in q, a, b.
///  Motzkin: D0/E0 with W = V = (1,0,0,...); only meaningful at alpha = beta = 1.
enum class AnsatzKind { Tableau, Motzkin };
enum class Generator { D, E };

std::string to_string(AnsatzKind kind);

/// Raised when a truncated section is too small to give the exact product.
class TruncationError : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

/// Top-left m x m section of an infinite matrix over Polynomial, 1-indexed.
class TruncatedMatrix {
 public:
  explicit TruncatedMatrix(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[index(i, j)]; }

  /// row * this, skipping zero entries.
  std::vector<Polynomial> left_multiply(const std::vector<Polynomial>& row) const;
  /// this * column.
  std::vector<Polynomial> right_multiply(const std::vector<Polynomial>& column) const;

  friend TruncatedMatrix operator*(const TruncatedMatrix& x, const TruncatedMatrix& y);
  friend TruncatedMatrix operator+(const TruncatedMatrix& x, const TruncatedMatrix& y);
  friend TruncatedMatrix operator-(const TruncatedMatrix& x, const TruncatedMatrix& y);
  friend TruncatedMatrix operator*(const Polynomial& s, const TruncatedMatrix& x);
  friend bool operator==(const TruncatedMatrix&, const TruncatedMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t dim_;
  std::vector<Polynomial> entries_;
};

/// q-integer [i] = 1 + q + ... + q^(i-1); [0] = 0.
Polynomial qint(int i);

TruncatedMatrix build(AnsatzKind kind, Generator which, std::size_t dim);

/// A complete truncated solution: both generators, boundary vectors and the
/// eigenvalues the relations DV = lambda_V V and WE = lambda_W W require.
struct AnsatzSection {
  AnsatzKind kind;
  TruncatedMatrix d;
  TruncatedMatrix e;
  std::vector<Polynomial> w;
  std::vector<Polynomial> v;
  Polynomial dv_eigenvalue;
  Polynomial we_eigenvalue;

  static AnsatzSection build(AnsatzKind kind, std::size_t dim);
  std::size_t dim() const noexcept { return d.dim(); }
};

/// Evaluates W * prod(tau_i D + (1 - tau_i) E) * V on a fixed truncation,
/// sweeping a row vector from the left.
class AnsatzEvaluator {
 public:
  AnsatzEvaluator(AnsatzKind kind, std::size_t dim);
  explicit AnsatzEvaluator(AnsatzSection section);

  const AnsatzSection& section() const noexcept { return section_; }

  /// Throws TruncationError when dim < len(tau) + 2.
  Polynomial eval(const Configuration& tau) const;
  /// First row of the ordered product, length dim.
  std::vector<Polynomial> top_row(const Configuration& tau) const;
  /// W (D + E)^n V.
  Polynomial partition_function(std::size_t n) const;

 private:
  void require_dim(std::size_t n) const;

  AnsatzSection section_;
  TruncatedMatrix sum_;
};

/// Default truncation for n sites: n + 2.
std::size_t default_dim(std::size_t n);

Polynomial ansatz_eval(AnsatzKind kind, const Configuration& tau, std::optional<std::size_t> dim = std::nullopt);
Polynomial partition_function(AnsatzKind kind, std::size_t n);
std::vector<Polynomial> top_row(const Configuration& tau, std::optional<std::size_t> dim = std::nullopt);

struct RelationReport {
  bool ok = true;
  std::string failure;  ///< first failing entry, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

/// Checks DE - qED = D + E on the (m-1) x (m-1) block and the two eigenvector
/// relations on the first m-1 coordinates, where truncation cannot interfere.
RelationReport check_relations(const AnsatzSection& section);
RelationReport check_relations(AnsatzKind kind, std::size_t dim);

}  // namespace pasep
