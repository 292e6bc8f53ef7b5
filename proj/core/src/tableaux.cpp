#include "pasep/tableaux.hpp"

#include <sstream>

#include "pasep/errors.hpp"

namespace pasep {

std::string PermutationTableau::to_string() const {
  std::string s = shape.to_string();
  s += '\n';
  for (const auto& row : filling) {
    for (auto v : row) s += static_cast<char>('0' + v);
    s += '\n';
  }
  return s;
}

PermutationTableau PermutationTableau::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
  }
  if (lines.empty()) throw ParseError("tableau text is empty", 0);

  PermutationTableau t;
  t.shape = Diagram::parse(lines[0]);
  std::size_t offset = lines[0].size() + 1;
  for (std::size_t r = 0; r < t.shape.rows(); ++r) {
    const std::string row = r + 1 < lines.size() ? lines[r + 1] : std::string{};
    std::vector<std::uint8_t> cells;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != '0' && row[c] != '1') throw ParseError("tableau rows must be over {0,1}", offset + c);
      cells.push_back(static_cast<std::uint8_t>(row[c] - '0'));
    }
    if (cells.size() != static_cast<std::size_t>(t.shape.part(r + 1))) {
      throw ParseError("row " + std::to_string(r + 1) + " has length " + std::to_string(cells.size()) +
                           ", shape requires " + std::to_string(t.shape.part(r + 1)),
                       offset);
    }
    t.filling.push_back(std::move(cells));
    offset += row.size() + 1;
  }
  for (std::size_t extra = t.shape.rows() + 1; extra < lines.size(); ++extra) {
    if (!lines[extra].empty()) throw ParseError("more rows than the shape allows", offset);
  }
  return t;
}

namespace {

void require_dimensions(const Diagram& shape, const Filling& filling) {
  if (filling.size() != shape.rows()) {
    throw InvalidParameter("filling has " + std::to_string(filling.size()) + " rows, shape " +
                           shape.to_string() + " has " + std::to_string(shape.rows()));
  }
  for (std::size_t i = 0; i < filling.size(); ++i) {
    if (filling[i].size() != static_cast<std::size_t>(shape.part(i + 1))) {
      throw InvalidParameter("filling row " + std::to_string(i + 1) + " does not match shape " + shape.to_string());
    }
    for (auto v : filling[i]) {
      if (v > 1) throw InvalidParameter("filling entries must be 0 or 1");
    }
  }
}

}  // namespace

bool is_valid(const Diagram& shape, const Filling& filling) {
  require_dimensions(shape, filling);
  const int cols = shape.cols();
  std::vector<bool> col_has_one(static_cast<std::size_t>(cols), false);
  for (const auto& row : filling) {
    bool one_to_left = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0 && col_has_one[j] && one_to_left) return false;
      if (row[j] == 1) {
        one_to_left = true;
        col_has_one[j] = true;
      }
    }
  }
  for (bool seen : col_has_one) {
    if (!seen) return false;
  }
  return true;
}

std::size_t unrestricted_rows(const PermutationTableau& t) {
  std::vector<bool> col_has_one(static_cast<std::size_t>(t.shape.cols()), false);
  std::size_t count = 0;
  for (const auto& row : t.filling) {
    bool restricted = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0 && col_has_one[j]) restricted = true;
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 1) col_has_one[j] = true;
    }
    if (!restricted) ++count;
  }
  return count;
}

TableauStats stats(const PermutationTableau& t) {
  if (!is_valid(t.shape, t.filling)) throw InvalidParameter("stats: not a permutation tableau:\n" + t.to_string());
  int ones = 0;
  for (const auto& row : t.filling) {
    for (auto v : row) ones += v;
  }
  TableauStats s;
  s.wt = ones - t.shape.cols();
  for (auto v : t.filling.front()) s.f += v;
  s.u = static_cast<int>(unrestricted_rows(t)) - 1;
  return s;
}

Polynomial stat_monomial(const TableauStats& s) {
  return Polynomial::monomial({s.wt, s.f, s.u});
}

namespace {

// Row-major backtracking. col_has_one tracks a 1 above the current cell, one_to_left
// a 1 earlier in the current row, so each rule is an O(1) test per cell.
class TableauEnumerator {
 public:
  TableauEnumerator(const Diagram& shape, const std::function<void(const PermutationTableau&)>& visit)
      : visit_(visit), col_has_one_(static_cast<std::size_t>(shape.cols()), false) {
    tableau_.shape = shape;
    for (std::size_t i = 1; i <= shape.rows(); ++i) {
      tableau_.filling.emplace_back(static_cast<std::size_t>(shape.part(i)), std::uint8_t{0});
    }
    for (int j = 0; j < shape.cols(); ++j) last_row_of_col_.push_back(shape.column_height(j) - 1);
  }

  void run() { place(0, 0, false); }

 private:
  void place(std::size_t row, std::size_t col, bool one_to_left) {
    auto& filling = tableau_.filling;
    if (row == filling.size()) {
      visit_(tableau_);
      return;
    }
    if (col == filling[row].size()) {
      place(row + 1, 0, false);
      return;
    }
    const bool above = col_has_one_[col];
    const bool closes_column = last_row_of_col_[col] == row;

    if (!(above && one_to_left) && !(closes_column && !above)) {
      filling[row][col] = 0;
      place(row, col + 1, one_to_left);
    }

    filling[row][col] = 1;
    col_has_one_[col] = true;
    place(row, col + 1, true);
    col_has_one_[col] = above;
    filling[row][col] = 0;
  }

  const std::function<void(const PermutationTableau&)>& visit_;
  PermutationTableau tableau_;
  std::vector<bool> col_has_one_;
  std::vector<std::size_t> last_row_of_col_;
};

}  // namespace

void for_each_tableau(const Diagram& shape, const std::function<void(const PermutationTableau&)>& visit) {
  if (shape.rows() == 0) throw InvalidParameter("for_each_tableau: a diagram needs at least one row");
  TableauEnumerator(shape, visit).run();
}

std::vector<PermutationTableau> enumerate(const Diagram& shape) {
  std::vector<PermutationTableau> out;
  for_each_tableau(shape, [&](const PermutationTableau& t) { out.push_back(t); });
  return out;
}

Polynomial genfun_shape(const Diagram& shape) {
  Polynomial sum;
  for_each_tableau(shape, [&](const PermutationTableau& t) { sum += stat_monomial(stats(t)); });
  return sum;
}

Polynomial genfun_expanse(std::size_t n) {
  if (n < 1) throw InvalidParameter("genfun_expanse: expanse must be >= 1");
  Polynomial sum;
  for (const auto& lambda : diagrams_of_expanse(n)) sum += genfun_shape(lambda);
  return sum;
}

std::vector<Polynomial> genfun_by_unrestricted(const Diagram& shape) {
  std::vector<Polynomial> out(shape.rows());
  for_each_tableau(shape, [&](const PermutationTableau& t) {
    const auto s = stats(t);
    out[static_cast<std::size_t>(s.u)] += stat_monomial(s);
  });
  return out;
}

Polynomial genfun_rows_cols(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) throw InvalidParameter("genfun_rows_cols: need 1 <= k <= n");
  Polynomial sum;
  for (const auto& lambda : diagrams_of_expanse(n)) {
    if (lambda.rows() == k) sum += genfun_shape(lambda).at_ab_one();
  }
  return sum;
}

}  // namespace pasep
