#include "pasep/shapes.hpp"

#include <algorithm>
#include <cctype>

#include "pasep/errors.hpp"

namespace pasep {

Configuration::Configuration(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw InvalidParameter("configuration entries must be 0 or 1");
  }
}

Configuration Configuration::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw ParseError(std::string("configuration must be a string over {0,1}, got '") + text[i] + "'", i);
    }
    bits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
  }
  return Configuration(std::move(bits));
}

Configuration Configuration::from_index(std::size_t n, std::uint64_t index) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1u);
  return Configuration(std::move(bits));
}

std::size_t Configuration::particles() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t Configuration::index() const noexcept {
  std::uint64_t v = 0;
  for (auto b : bits_) v = (v << 1u) | b;
  return v;
}

std::string Configuration::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s += static_cast<char>('0' + b);
  return s;
}

std::vector<Configuration> all_configurations(std::size_t n) {
  std::vector<Configuration> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) out.push_back(Configuration::from_index(n, i));
  return out;
}

Diagram::Diagram(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidParameter("diagram parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidParameter("diagram parts must be weakly decreasing");
  }
}

Diagram Diagram::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && text[i] == ' ') ++i;
    const std::size_t start = i;
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw ParseError("diagram part too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected a nonnegative integer part", start);
    parts.push_back(static_cast<int>(v));
    while (i < text.size() && text[i] == ' ') ++i;
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError(std::string("expected ',' but got '") + text[i] + "'", i);
    ++i;
  }
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k] > parts[k - 1]) throw ParseError("diagram parts must be weakly decreasing", 0);
  }
  return Diagram(std::move(parts));
}

int Diagram::boxes() const noexcept {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::size_t Diagram::column_height(int j) const noexcept {
  std::size_t h = 0;
  while (h < parts_.size() && parts_[h] > j) ++h;
  return h;
}

std::string Diagram::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<PathStep> boundary_path(const Diagram& lambda) {
  std::vector<PathStep> path;
  path.reserve(lambda.expanse());
  for (std::size_t i = 1; i <= lambda.rows(); ++i) {
    path.push_back(PathStep::South);
    for (int w = lambda.part(i + 1); w < lambda.part(i); ++w) path.push_back(PathStep::West);
  }
  return path;
}

std::string to_string(const std::vector<PathStep>& path) {
  std::string s;
  for (auto step : path) s += step == PathStep::South ? 'S' : 'W';
  return s;
}

Diagram lambda_of_tau(const Configuration& tau) {
  // Row i has as many boxes as there are W steps after the i-th S step.
  std::vector<int> parts{0};
  for (auto bit : tau.bits()) {
    if (bit == 1) {
      parts.push_back(0);
    } else {
      for (int& p : parts) ++p;
    }
  }
  return Diagram(std::move(parts));
}

Configuration phi(const Diagram& lambda) {
  if (lambda.rows() == 0) throw InvalidParameter("phi: a diagram needs at least one row");
  auto path = boundary_path(lambda);
  std::vector<std::uint8_t> bits;
  bits.reserve(path.size() - 1);
  for (std::size_t i = 1; i < path.size(); ++i) bits.push_back(path[i] == PathStep::South ? 1 : 0);
  return Configuration(std::move(bits));
}

std::vector<Diagram> diagrams_of_expanse(std::size_t expanse) {
  if (expanse < 1) throw InvalidParameter("diagrams_of_expanse: expanse must be >= 1");
  std::vector<Diagram> out;
  for (const auto& tau : all_configurations(expanse - 1)) out.push_back(lambda_of_tau(tau));
  return out;
}

std::vector<std::size_t> corners(const Diagram& lambda) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= lambda.rows(); ++i) {
    if (lambda.part(i) > 0 && lambda.part(i) > lambda.part(i + 1)) out.push_back(i);
  }
  return out;
}

std::set<int> wexc_set(const Configuration& tau) {
  std::set<int> s{1};
  for (std::size_t i = 1; i <= tau.size(); ++i) {
    if (tau.site(i) == 1) s.insert(static_cast<int>(i) + 1);
  }
  return s;
}

std::set<int> descent_set(const Configuration& tau) {
  std::set<int> s;
  for (std::size_t i = 1; i <= tau.size(); ++i) {
    if (tau.site(i) == 1) s.insert(static_cast<int>(i));
  }
  return s;
}

namespace {

void require_comparable(const Configuration& tau, const Configuration& tau2) {
  if (tau.size() != tau2.size()) {
    throw InvalidParameter("precedes: configurations " + tau.to_string() + " and " + tau2.to_string() +
                           " have different lengths");
  }
  if (tau.particles() != tau2.particles()) {
    throw InvalidParameter("precedes: configurations " + tau.to_string() + " and " + tau2.to_string() +
                           " have different particle counts");
  }
}

}  // namespace

bool precedes(const Configuration& tau, const Configuration& tau2) {
  require_comparable(tau, tau2);
  const Diagram small = lambda_of_tau(tau);
  const Diagram big = lambda_of_tau(tau2);
  for (std::size_t i = 1; i <= small.rows(); ++i) {
    if (small.part(i) > big.part(i)) return false;
  }
  return true;
}

bool hasse_cover(const Configuration& tau, const Configuration& tau2) {
  if (!precedes(tau, tau2)) return false;
  return lambda_of_tau(tau2).boxes() - lambda_of_tau(tau).boxes() == 1;
}

}  // namespace pasep
