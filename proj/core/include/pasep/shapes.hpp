#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pasep {

/// Occupancy vector of a PASEP chain; bit i (0-based here, site i+1) is 1 when occupied.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<std::uint8_t> bits);

  /// Parses a string over {0,1}; the empty string is the empty configuration.
  static Configuration parse(std::string_view text);
  /// Configuration of length n whose site 1 is the most significant bit of index.
  static Configuration from_index(std::size_t n, std::uint64_t index);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  /// 1-based site access, matching the usual tau_1 ... tau_n numbering.
  std::uint8_t site(std::size_t i) const { return bits_.at(i - 1); }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::size_t particles() const noexcept;
  std::uint64_t index() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// All 2^n configurations of length n in binary order (000, 001, ...).
std::vector<Configuration> all_configurations(std::size_t n);

/// A Young diagram that remembers its empty rows: parts are weakly decreasing,
/// zero parts are allowed, and (2,1) and (2,1,0) are different diagrams.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<int> parts);

  /// Parses "2,1,0". An empty string is not a diagram (every diagram has a row).
  static Diagram parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t rows() const noexcept { return parts_.size(); }
  int cols() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  std::size_t expanse() const noexcept { return rows() + static_cast<std::size_t>(cols()); }
  /// Number of boxes.
  int boxes() const noexcept;
  /// 1-based row length; rows past the end have length 0.
  int part(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  /// Number of rows whose length exceeds column index j (0-based), i.e. the height of column j+1.
  std::size_t column_height(int j) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  std::vector<int> parts_;
};

enum class PathStep : std::uint8_t { South, West };

/// The south/west boundary path of a diagram, read from its north-east corner.
std::vector<PathStep> boundary_path(const Diagram& lambda);
std::string to_string(const std::vector<PathStep>& path);

/// lambda(tau): expanse len(tau)+1.
Diagram lambda_of_tau(const Configuration& tau);
/// Inverse of lambda_of_tau.
Configuration phi(const Diagram& lambda);

/// All diagrams of the given expanse (n >= 1), ordered by phi(lambda) in binary order.
std::vector<Diagram> diagrams_of_expanse(std::size_t expanse);

/// 1-based indices i with lambda_i > lambda_{i+1} and lambda_i > 0.
std::vector<std::size_t> corners(const Diagram& lambda);

/// W(tau): {1} plus {i+1 : tau_i = 1}, a subset of {1..n+1}.
std::set<int> wexc_set(const Configuration& tau);
/// D(tau): {i : tau_i = 1}.
std::set<int> descent_set(const Configuration& tau);

/// tau precedes tau2 iff lambda(tau) is contained in lambda(tau2). Both must have the
/// same length and particle count, otherwise InvalidParameter is thrown.
bool precedes(const Configuration& tau, const Configuration& tau2);
/// Cover relation: precedes and the diagrams differ by exactly one box.
bool hasse_cover(const Configuration& tau, const Configuration& tau2);

}  // namespace pasep
