#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pasep/poly.hpp"
#include "pasep/shapes.hpp"

namespace pasep {

/// One 0/1 row per diagram row; row i has exactly lambda_i entries.
using Filling = std::vector<std::vector<std::uint8_t>>;

struct PermutationTableau {
  Diagram shape;
  Filling filling;

  /// Shape line ("2,1") followed by one line of 0/1 characters per row; empty rows are blank lines.
  std::string to_string() const;
  static PermutationTableau parse(std::string_view text);

  friend bool operator==(const PermutationTableau&, const PermutationTableau&) = default;
};

struct TableauStats {
  int wt = 0;  ///< ones minus columns
  int f = 0;   ///< ones in the first row
  int u = 0;   ///< unrestricted rows minus one

  friend bool operator==(const TableauStats&, const TableauStats&) = default;
};

/// Checks the two filling rules: every column holds a 1, and no 0 has both a 1
/// above it in its column and a 1 to its left in its row.
/// Throws InvalidParameter when the filling's dimensions do not match the shape.
bool is_valid(const Diagram& shape, const Filling& filling);

/// A row is unrestricted when none of its entries is a 0 lying below a 1.
/// Empty rows are unrestricted.
std::size_t unrestricted_rows(const PermutationTableau& t);

/// Throws InvalidParameter for an invalid tableau.
TableauStats stats(const PermutationTableau& t);

/// q^wt a^f b^u.
Polynomial stat_monomial(const TableauStats& s);

/// Visits every permutation tableau of the shape exactly once, fillings in row-major
/// order with 0 tried before 1. The reference is only valid during the callback.
void for_each_tableau(const Diagram& shape, const std::function<void(const PermutationTableau&)>& visit);

std::vector<PermutationTableau> enumerate(const Diagram& shape);

/// F_lambda: sum of q^wt a^f b^u over tableaux of the shape.
Polynomial genfun_shape(const Diagram& shape);

/// F^n: sum of genfun_shape over every diagram of expanse n (n >= 1).
Polynomial genfun_expanse(std::size_t n);

/// Entry i-1 collects the tableaux with exactly i unrestricted rows, i = 1..rows.
std::vector<Polynomial> genfun_by_unrestricted(const Diagram& shape);

/// Tableaux with k rows and n-k columns counted by weight alone (a = b = 1).
Polynomial genfun_rows_cols(std::size_t k, std::size_t n);

}  // namespace pasep
