#include "pasep/motzkin.hpp"

#include "pasep/ansatz.hpp"

namespace pasep {

namespace {

int height_delta(MotzkinStep s) {
  switch (s) {
    case MotzkinStep::N: return 1;
    case MotzkinStep::S: return -1;
    default: return 0;
  }
}

char step_char(MotzkinStep s) {
  switch (s) {
    case MotzkinStep::N: return 'N';
    case MotzkinStep::S: return 'S';
    case MotzkinStep::E: return 'E';
    case MotzkinStep::EBar: return 'F';
  }
  return '?';
}

bool occupies(MotzkinStep s) { return s == MotzkinStep::N || s == MotzkinStep::E; }

}  // namespace

MotzkinPath MotzkinPath::parse(std::string_view text) {
  std::vector<MotzkinStep> steps;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'N': steps.push_back(MotzkinStep::N); break;
      case 'S': steps.push_back(MotzkinStep::S); break;
      case 'E': steps.push_back(MotzkinStep::E); break;
      case 'F': steps.push_back(MotzkinStep::EBar); break;
      default: throw ParseError(std::string("path steps are N, S, E, F; got '") + text[i] + "'", i);
    }
  }
  return MotzkinPath(std::move(steps));
}

std::vector<int> MotzkinPath::end_heights() const {
  std::vector<int> h;
  h.reserve(steps_.size());
  int cur = 0;
  for (auto s : steps_) {
    cur += height_delta(s);
    h.push_back(cur);
  }
  return h;
}

bool MotzkinPath::is_valid() const {
  int cur = 0;
  for (auto s : steps_) {
    cur += height_delta(s);
    if (cur < 0) return false;
  }
  return cur == 0;
}

bool MotzkinPath::has_type(const Configuration& tau) const {
  if (tau.size() != steps_.size()) return false;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (occupies(steps_[i]) != (tau.bits()[i] == 1)) return false;
  }
  return true;
}

std::string MotzkinPath::to_string() const {
  std::string s;
  for (auto step : steps_) s += step_char(step);
  return s;
}

Polynomial weight(const MotzkinPath& p) {
  if (!p.is_valid()) throw PathError("not a Motzkin path: " + p.to_string());
  Polynomial w(1);
  for (int h : p.end_heights()) w *= qint(h + 1);
  return w;
}

namespace {

void extend(const Configuration& tau, std::vector<MotzkinStep>& prefix, int height,
            std::vector<MotzkinPath>& out) {
  const std::size_t i = prefix.size();
  if (i == tau.size()) {
    if (height == 0) out.emplace_back(prefix);
    return;
  }
  const int remaining_after = static_cast<int>(tau.size() - i - 1);
  const bool occupied = tau.bits()[i] == 1;
  const MotzkinStep options[2] = {occupied ? MotzkinStep::N : MotzkinStep::S,
                                  occupied ? MotzkinStep::E : MotzkinStep::EBar};
  for (auto s : options) {
    const int h = height + height_delta(s);
    if (h < 0 || h > remaining_after) continue;
    prefix.push_back(s);
    extend(tau, prefix, h, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MotzkinPath> enumerate_type(const Configuration& tau) {
  std::vector<MotzkinPath> out;
  std::vector<MotzkinStep> prefix;
  prefix.reserve(tau.size());
  extend(tau, prefix, 0, out);
  return out;
}

Polynomial genfun_type(const Configuration& tau) {
  Polynomial sum;
  for (const auto& p : enumerate_type(tau)) sum += weight(p);
  return sum;
}

StepSwap mono_step_compare(const MotzkinPath& p, std::size_t i) {
  if (i < 1 || i + 1 > p.size()) {
    throw InvalidParameter("mono_step_compare: position " + std::to_string(i) + " out of range for " + p.to_string());
  }
  const auto first = p.steps()[i - 1];
  const auto second = p.steps()[i];
  const bool swappable = (first == MotzkinStep::S || first == MotzkinStep::EBar) &&
                         (second == MotzkinStep::N || second == MotzkinStep::E);
  if (!swappable) {
    throw InvalidParameter(std::string("mono_step_compare: steps ") + step_char(first) + step_char(second) +
                           " at position " + std::to_string(i) + " are not one of SN, SE, FN, FE");
  }
  auto steps = p.steps();
  std::swap(steps[i - 1], steps[i]);
  MotzkinPath swapped(std::move(steps));
  Polynomial diff = weight(swapped) - weight(p);
  return {std::move(swapped), std::move(diff)};
}

}  // namespace pasep
