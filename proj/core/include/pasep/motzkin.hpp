#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pasep/errors.hpp"
#include "pasep/poly.hpp"
#include "pasep/shapes.hpp"

namespace pasep {

/// Bicolored Motzkin steps. EBar is the second-colour level step, written 'F' in text.
enum class MotzkinStep : std::uint8_t { N, S, E, EBar };

class PathError : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class MotzkinPath {
 public:
  MotzkinPath() = default;
  explicit MotzkinPath(std::vector<MotzkinStep> steps) : steps_(std::move(steps)) {}

  /// String over {N,S,E,F}.
  static MotzkinPath parse(std::string_view text);

  const std::vector<MotzkinStep>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }

  /// Height after each step (recomputed on every call).
  std::vector<int> end_heights() const;
  /// Never below 0 and ends at 0.
  bool is_valid() const;
  /// Steps N/E where tau_i = 1 and S/EBar where tau_i = 0.
  bool has_type(const Configuration& tau) const;

  std::string to_string() const;

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  std::vector<MotzkinStep> steps_;
};

/// Product over steps of [h + 1], h the height where the step ends. Throws PathError on an invalid path.
Polynomial weight(const MotzkinPath& p);

/// Every valid path of type tau, each once; N before E and S before EBar at each position.
std::vector<MotzkinPath> enumerate_type(const Configuration& tau);

/// Sum of weight(p) over paths of type tau.
Polynomial genfun_type(const Configuration& tau);

struct StepSwap {
  MotzkinPath swapped;
  Polynomial difference;  ///< weight(swapped) - weight(original)
};

/// Swaps steps i and i+1 (1-based); they must read SN, SE, EBar N or EBar E.
/// Throws InvalidParameter otherwise.
StepSwap mono_step_compare(const MotzkinPath& p, std::size_t i);

}  // namespace pasep
