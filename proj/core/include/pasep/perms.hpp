#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pasep/poly.hpp"
#include "pasep/shapes.hpp"

namespace pasep {

/// A permutation of {1..m} in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t m);
  /// Accepts "3,1,4,2" or, for m <= 9, "3142".
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return images_.size(); }
  /// pi(i), 1-based.
  int operator()(std::size_t i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// {i : pi(i) >= i}.
std::set<int> weak_excedence_set(const Permutation& pi);

/// Pairs (i, j) with j < i <= pi(j) < pi(i) or pi(i) < pi(j) < i < j.
int crossings(const Permutation& pi);

/// {i < m : pi(i) > pi(i+1)}.
std::set<int> descent_set(const Permutation& pi);

/// Occurrences of the generalized pattern 2-31: pairs i < j < m with pi(j+1) < pi(i) < pi(j).
int count_2_31(const Permutation& pi);

/// Occurrences of 31-2: pairs i+1 < j with pi(i+1) < pi(j) < pi(i).
int count_31_2(const Permutation& pi);

using PatternCounter = std::function<int(const Permutation&)>;

/// Visits S_m in lexicographic order.
void for_each_permutation(std::size_t m, const std::function<void(const Permutation&)>& visit);

/// Sum of q^crossings over pi in S_{n+1} whose weak excedence set is W(tau).
Polynomial genfun_wexc_class(const Configuration& tau);

/// Sum of q^counter(pi) over pi in S_m whose descent set is exactly `descents`.
Polynomial genfun_descent_class(const std::set<int>& descents, std::size_t m,
                                const PatternCounter& counter = count_2_31);

/// Sum over S_m of q^crossings.
Polynomial crossings_distribution(std::size_t m);
/// Sum over S_m of q^(2-31 occurrences).
Polynomial pattern_distribution(std::size_t m);

/// Entry k is the sum of q^crossings over pi in S_m with exactly k weak excedences (k = 0..m).
std::vector<Polynomial> crossings_by_wexc_count(std::size_t m);
/// Entry k is the sum of q^(2-31) over pi in S_m with exactly k descents (k = 0..m-1).
std::vector<Polynomial> pattern_by_descent_count(std::size_t m);

/// The q-Eulerian polynomial E^_{k,n}(q), 1 <= k <= n, from its alternating-sum closed form.
/// Throws std::logic_error if the q^(k - k^2) prefactor does not cancel.
Polynomial q_eulerian(int k, int n);

/// One candidate reading of the descent-class statement: which pattern is counted and
/// how D(tau) is transformed before selecting the class.
struct DescentConvention {
  std::string pattern;    ///< "2-31" or "31-2"
  std::string transform;  ///< "identity", "reverse", "complement", "reverse-complement"
};

struct ConventionFinding {
  DescentConvention convention;
  bool matches_all = false;
  std::string first_mismatch;  ///< empty when matches_all
};

/// For every m <= max_m and every tau of length m-1, compares the descent class under each
/// candidate convention with the weak-excedence/crossing class of tau. Reports, never asserts.
std::vector<ConventionFinding> search_descent_conventions(std::size_t max_m);

}  // namespace pasep
