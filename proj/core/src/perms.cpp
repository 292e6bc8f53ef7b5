#include "pasep/perms.hpp"

#include <algorithm>
#include <stdexcept>
#include <cctype>
#include <numeric>

#include "pasep/ansatz.hpp"
#include "pasep/errors.hpp"

namespace pasep {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidParameter("not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '0') {
        throw ParseError("expected a digit 1-9", i);
      }
      v.push_back(text[i] - '0');
    }
  } else {
    std::size_t i = 0;
    while (i <= text.size()) {
      const std::size_t start = i;
      int x = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) x = x * 10 + (text[i++] - '0');
      if (i == start) throw ParseError("expected an integer", start);
      v.push_back(x);
      if (i == text.size()) break;
      if (text[i] != ',') throw ParseError("expected ','", i);
      ++i;
    }
  }
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s;
}

std::set<int> weak_excedence_set(const Permutation& pi) {
  std::set<int> s;
  for (std::size_t i = 1; i <= pi.size(); ++i) {
    if (pi(i) >= static_cast<int>(i)) s.insert(static_cast<int>(i));
  }
  return s;
}

int crossings(const Permutation& pi) {
  const int m = static_cast<int>(pi.size());
  const auto& p = pi.images();
  int count = 0;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int pii = p[static_cast<std::size_t>(i - 1)];
      const int pij = p[static_cast<std::size_t>(j - 1)];
      if ((j < i && i <= pij && pij < pii) || (pii < pij && pij < i && i < j)) ++count;
    }
  }
  return count;
}

std::set<int> descent_set(const Permutation& pi) {
  std::set<int> s;
  for (std::size_t i = 1; i < pi.size(); ++i) {
    if (pi(i) > pi(i + 1)) s.insert(static_cast<int>(i));
  }
  return s;
}

int count_2_31(const Permutation& pi) {
  const std::size_t m = pi.size();
  int count = 0;
  for (std::size_t j = 2; j < m; ++j) {
    const int hi = pi(j);
    const int lo = pi(j + 1);
    if (lo > hi) continue;
    for (std::size_t i = 1; i < j; ++i) {
      if (lo < pi(i) && pi(i) < hi) ++count;
    }
  }
  return count;
}

int count_31_2(const Permutation& pi) {
  const std::size_t m = pi.size();
  int count = 0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const int hi = pi(i);
    const int lo = pi(i + 1);
    if (lo > hi) continue;
    for (std::size_t j = i + 2; j <= m; ++j) {
      if (lo < pi(j) && pi(j) < hi) ++count;
    }
  }
  return count;
}

void for_each_permutation(std::size_t m, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

namespace {

// Accumulates q^stat per stat value as machine integers, then converts once.
class Histogram {
 public:
  void add(int stat) {
    if (static_cast<std::size_t>(stat) >= counts_.size()) counts_.resize(static_cast<std::size_t>(stat) + 1, 0);
    ++counts_[static_cast<std::size_t>(stat)];
  }

  Polynomial polynomial() const {
    Polynomial p;
    for (std::size_t e = 0; e < counts_.size(); ++e) {
      if (counts_[e] != 0) p += Polynomial::monomial({static_cast<int>(e), 0, 0}, Integer(counts_[e]));
    }
    return p;
  }

 private:
  std::vector<unsigned long> counts_;
};

}  // namespace

Polynomial genfun_wexc_class(const Configuration& tau) {
  const auto target = wexc_set(tau);
  Histogram h;
  for_each_permutation(tau.size() + 1, [&](const Permutation& pi) {
    if (weak_excedence_set(pi) == target) h.add(crossings(pi));
  });
  return h.polynomial();
}

Polynomial genfun_descent_class(const std::set<int>& descents, std::size_t m, const PatternCounter& counter) {
  for (int d : descents) {
    if (d < 1 || static_cast<std::size_t>(d) >= m) {
      throw InvalidParameter("genfun_descent_class: descent " + std::to_string(d) + " outside 1.." +
                             std::to_string(m == 0 ? 0 : m - 1));
    }
  }
  Histogram h;
  for_each_permutation(m, [&](const Permutation& pi) {
    if (descent_set(pi) == descents) h.add(counter(pi));
  });
  return h.polynomial();
}

Polynomial crossings_distribution(std::size_t m) {
  Histogram h;
  for_each_permutation(m, [&](const Permutation& pi) { h.add(crossings(pi)); });
  return h.polynomial();
}

Polynomial pattern_distribution(std::size_t m) {
  Histogram h;
  for_each_permutation(m, [&](const Permutation& pi) { h.add(count_2_31(pi)); });
  return h.polynomial();
}

std::vector<Polynomial> crossings_by_wexc_count(std::size_t m) {
  std::vector<Histogram> h(m + 1);
  for_each_permutation(m, [&](const Permutation& pi) { h[weak_excedence_set(pi).size()].add(crossings(pi)); });
  std::vector<Polynomial> out;
  for (const auto& x : h) out.push_back(x.polynomial());
  return out;
}

std::vector<Polynomial> pattern_by_descent_count(std::size_t m) {
  std::vector<Histogram> h(m == 0 ? 1 : m);
  for_each_permutation(m, [&](const Permutation& pi) { h[descent_set(pi).size()].add(count_2_31(pi)); });
  std::vector<Polynomial> out;
  for (const auto& x : h) out.push_back(x.polynomial());
  return out;
}

Polynomial q_eulerian(int k, int n) {
  if (k < 1 || k > n) throw InvalidParameter("q_eulerian: need 1 <= k <= n");
  auto binom = [](int top, int bottom) {
    Integer r = 0;
    if (bottom >= 0 && bottom <= top) mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return r;
  };
  Polynomial sum;
  for (int i = 0; i <= k - 1; ++i) {
    Polynomial bracket = Polynomial::monomial({k - i, 0, 0}, binom(n, i)) + Polynomial(binom(n, i - 1));
    Polynomial term = qint(k - i).pow(static_cast<unsigned>(n)) * Polynomial::q(k * i - k) * bracket;
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Polynomial result = Polynomial::q(k - k * k) * sum;
  if (!result.is_polynomial()) throw std::logic_error("q_eulerian: negative q power survived");
  return result;
}

namespace {

std::set<int> transform_descents(const std::set<int>& d, std::size_t m, const std::string& transform) {
  const int top = static_cast<int>(m) - 1;
  auto reverse = [&](const std::set<int>& s) {
    std::set<int> r;
    for (int x : s) r.insert(static_cast<int>(m) - x);
    return r;
  };
  auto complement = [&](const std::set<int>& s) {
    std::set<int> r;
    for (int x = 1; x <= top; ++x) {
      if (!s.count(x)) r.insert(x);
    }
    return r;
  };
  if (transform == "reverse") return reverse(d);
  if (transform == "complement") return complement(d);
  if (transform == "reverse-complement") return reverse(complement(d));
  return d;
}

}  // namespace

std::vector<ConventionFinding> search_descent_conventions(std::size_t max_m) {
  const std::vector<std::pair<std::string, PatternCounter>> patterns = {{"2-31", count_2_31}, {"31-2", count_31_2}};
  const std::vector<std::string> transforms = {"identity", "reverse", "complement", "reverse-complement"};

  std::vector<ConventionFinding> findings;
  for (const auto& [pattern_name, counter] : patterns) {
    for (const auto& transform : transforms) {
      ConventionFinding f{{pattern_name, transform}, true, {}};
      for (std::size_t m = 1; m <= max_m && f.matches_all; ++m) {
        for (const auto& tau : all_configurations(m - 1)) {
          // D(tau) ranges over {1..n} with n = m - 1, so it is a candidate descent set of S_m.
          const auto target = transform_descents(descent_set(tau), m, transform);
          const Polynomial lhs = genfun_descent_class(target, m, counter);
          const Polynomial rhs = genfun_wexc_class(tau);
          if (lhs != rhs) {
            f.matches_all = false;
            f.first_mismatch = "tau=" + tau.to_string() + ": descent class " + lhs.to_string() +
                               ", crossing class " + rhs.to_string();
            break;
          }
        }
      }
      findings.push_back(std::move(f));
    }
  }
  return findings;
}

}  // namespace pasep
