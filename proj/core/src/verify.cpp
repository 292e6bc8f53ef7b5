#include "pasep/verify.hpp"

#include <json.hpp>

#include "pasep/ansatz.hpp"
#include "pasep/perms.hpp"
#include "pasep/tableaux.hpp"

namespace pasep {

namespace {

// f_s(tau) for every s <= n, indexed [s][tau.index()], from one shared truncation.
class WeightTable {
 public:
  explicit WeightTable(std::size_t n) : evaluator_(AnsatzKind::Tableau, default_dim(n)) {
    for (std::size_t s = 0; s <= n; ++s) {
      auto& level = weights_.emplace_back();
      for (const auto& tau : all_configurations(s)) level.push_back(evaluator_.eval(tau));
    }
  }

  const Polynomial& operator()(const Configuration& tau) const { return weights_.at(tau.size()).at(tau.index()); }

 private:
  AnsatzEvaluator evaluator_;
  std::vector<std::vector<Polynomial>> weights_;
};

struct ComparablePair {
  Configuration low;
  Configuration high;
  int box_difference;
};

// Every ordered pair low < high (reflexive pairs included) of equal length s <= n and equal particle count.
std::vector<ComparablePair> comparable_pairs(std::size_t n) {
  std::vector<ComparablePair> out;
  for (std::size_t s = 0; s <= n; ++s) {
    const auto configs = all_configurations(s);
    for (const auto& x : configs) {
      for (const auto& y : configs) {
        if (x.particles() != y.particles() || !precedes(x, y)) continue;
        out.push_back({x, y, lambda_of_tau(y).boxes() - lambda_of_tau(x).boxes()});
      }
    }
  }
  return out;
}

void fail(CheckResult& r, Witness w) {
  if (!r.passed) return;
  r.passed = false;
  r.counterexample = std::move(w);
}

std::string scope_n(std::size_t n, const std::string& extra) { return "n<=" + std::to_string(n) + ", " + extra; }

Configuration erase_site(const Configuration& tau, std::size_t site) {
  auto bits = tau.bits();
  bits.erase(bits.begin() + static_cast<std::ptrdiff_t>(site - 1));
  return Configuration(std::move(bits));
}

Configuration append_site(const Configuration& tau, std::uint8_t v) {
  auto bits = tau.bits();
  bits.push_back(v);
  return Configuration(std::move(bits));
}

Configuration prepend_site(const Configuration& tau, std::uint8_t v) {
  auto bits = tau.bits();
  bits.insert(bits.begin(), v);
  return Configuration(std::move(bits));
}

}  // namespace

CheckResult check_qdiff(std::size_t n) {
  CheckResult r{"qdiff", scope_n(n, "symbolic a,b"), true, std::nullopt, {}, 0};
  const WeightTable f(n);
  for (const auto& [low, high, d] : comparable_pairs(n)) {
    ++r.cases;
    const Polynomial diff = f(high) - Polynomial::q(d) * f(low);
    if (!diff.is_nonnegative()) {
      fail(r, {{"tau", low.to_string()}, {"tau2", high.to_string()}, {"d", std::to_string(d)},
               {"difference", diff.to_string()}});
      break;
    }
  }
  return r;
}

CheckResult check_mono(std::size_t n) {
  CheckResult r{"mono", scope_n(n, "a=b=1"), true, std::nullopt, {}, 0};
  const WeightTable f(n);
  for (const auto& [low, high, d] : comparable_pairs(n)) {
    ++r.cases;
    const Polynomial diff = f(high).at_ab_one() - f(low).at_ab_one();
    if (!diff.is_nonnegative()) {
      fail(r, {{"tau", low.to_string()}, {"tau2", high.to_string()}, {"difference", diff.to_string()}});
      break;
    }
  }

  // With a and b symbolic the monotonicity fails already at four sites.
  const Configuration high = Configuration::parse("1100");
  const Configuration low = Configuration::parse("1010");
  const Polynomial symbolic = ansatz_eval(AnsatzKind::Tableau, high) - ansatz_eval(AnsatzKind::Tableau, low);
  ++r.cases;
  if (symbolic.is_nonnegative()) {
    fail(r, {{"tau", low.to_string()}, {"tau2", high.to_string()}, {"difference", symbolic.to_string()},
             {"expected", "a negative coefficient for symbolic a,b"}});
  } else {
    r.notes.push_back("expected-negative: f4(1100) - f4(1010) = " + symbolic.to_string());
  }
  return r;
}

CheckResult check_qd_interpolation(std::size_t n) {
  CheckResult r{"qd-interpolation", scope_n(n, "a=b=1, 0<=d<=box difference"), true, std::nullopt, {}, 0};
  const WeightTable f(n);
  for (const auto& [low, high, dmax] : comparable_pairs(n)) {
    const Polynomial top = f(high).at_ab_one();
    const Polynomial bottom = f(low).at_ab_one();
    for (int d = 0; d <= dmax && r.passed; ++d) {
      ++r.cases;
      const Polynomial diff = top - Polynomial::q(d) * bottom;
      if (!diff.is_nonnegative()) {
        fail(r, {{"tau", low.to_string()}, {"tau2", high.to_string()}, {"d", std::to_string(d)},
                 {"difference", diff.to_string()}});
      }
    }
    if (!r.passed) break;
  }
  return r;
}

CheckResult check_corner_recurrence(std::size_t n) {
  CheckResult r{"corner", scope_n(n, "symbolic a,b; configuration and diagram forms"), true, std::nullopt, {}, 0};
  const WeightTable f(n);
  for (std::size_t s = 2; s <= n && r.passed; ++s) {
    for (const auto& tau : all_configurations(s)) {
      for (std::size_t j = 1; j < s; ++j) {
        if (tau.site(j) != 1 || tau.site(j + 1) != 0) continue;
        ++r.cases;
        auto swapped_bits = tau.bits();
        std::swap(swapped_bits[j - 1], swapped_bits[j]);
        const Polynomial rhs = f(erase_site(tau, j + 1)) + Polynomial::q() * f(Configuration(swapped_bits)) +
                               f(erase_site(tau, j));
        if (f(tau) != rhs) {
          fail(r, {{"tau", tau.to_string()}, {"j", std::to_string(j)}, {"lhs", f(tau).to_string()},
                   {"rhs", rhs.to_string()}});
          break;
        }
      }
      if (!r.passed) break;
    }
  }

  // Diagram form, by enumeration, for corners below the first row.
  for (std::size_t expanse = 1; expanse <= n + 1 && r.passed; ++expanse) {
    for (const auto& lambda : diagrams_of_expanse(expanse)) {
      for (std::size_t i : corners(lambda)) {
        if (i == 1) continue;
        ++r.cases;
        auto parts = lambda.parts();
        auto column_removed = parts;
        for (std::size_t k = 0; k < i; ++k) --column_removed[k];
        auto row_removed = parts;
        row_removed.erase(row_removed.begin() + static_cast<std::ptrdiff_t>(i - 1));
        auto box_removed = parts;
        --box_removed[i - 1];
        const Polynomial rhs = genfun_shape(Diagram(column_removed)) + genfun_shape(Diagram(row_removed)) +
                               Polynomial::q() * genfun_shape(Diagram(box_removed));
        const Polynomial lhs = genfun_shape(lambda);
        if (lhs != rhs) {
          fail(r, {{"shape", lambda.to_string()}, {"row", std::to_string(i)}, {"lhs", lhs.to_string()},
                   {"rhs", rhs.to_string()}});
          break;
        }
      }
      if (!r.passed) break;
    }
  }
  return r;
}

CheckResult check_boundary_recurrences(std::size_t n) {
  CheckResult r{"boundary", scope_n(n, "symbolic a,b; configuration and diagram forms"), true, std::nullopt, {}, 0};
  const WeightTable f(n);
  for (std::size_t s = 0; s + 1 <= n && r.passed; ++s) {
    for (const auto& tau : all_configurations(s)) {
      ++r.cases;
      const Polynomial exit_side = f(append_site(tau, 1));
      if (exit_side != Polynomial::b() * f(tau)) {
        fail(r, {{"tau", tau.to_string()}, {"form", "f(tau,1) = b f(tau)"}, {"lhs", exit_side.to_string()},
                 {"rhs", (Polynomial::b() * f(tau)).to_string()}});
        break;
      }
      ++r.cases;
      const Polynomial entry_side = f(prepend_site(tau, 0));
      if (entry_side != Polynomial::a() * f(tau)) {
        fail(r, {{"tau", tau.to_string()}, {"form", "f(0,tau) = a f(tau)"}, {"lhs", entry_side.to_string()},
                 {"rhs", (Polynomial::a() * f(tau)).to_string()}});
        break;
      }
    }
  }

  // The tableau reading: an appended empty row is one more unrestricted row; a longer
  // first row is one more 1 in the first row.
  for (std::size_t expanse = 1; expanse + 1 <= n + 1 && r.passed; ++expanse) {
    for (const auto& lambda : diagrams_of_expanse(expanse)) {
      const Polynomial base = genfun_shape(lambda);
      auto with_row = lambda.parts();
      with_row.push_back(0);
      auto wider = lambda.parts();
      ++wider.front();
      r.cases += 2;
      const Polynomial row_side = genfun_shape(Diagram(with_row));
      const Polynomial wide_side = genfun_shape(Diagram(wider));
      if (row_side != Polynomial::b() * base) {
        fail(r, {{"shape", lambda.to_string()}, {"form", "F(lambda,0) = b F(lambda)"}, {"lhs", row_side.to_string()}});
        break;
      }
      if (wide_side != Polynomial::a() * base) {
        fail(r, {{"shape", lambda.to_string()}, {"form", "F(lambda_1+1,...) = a F(lambda)"},
                 {"lhs", wide_side.to_string()}});
        break;
      }
    }
  }
  return r;
}

CheckResult check_eulerian_aggregate(std::size_t n) {
  CheckResult r{"eulerian-aggregate", scope_n(n, "a=b=1, every particle count k"), true, std::nullopt, {}, 0};
  const WeightTable f(n);
  for (std::size_t s = 0; s <= n && r.passed; ++s) {
    std::vector<Polynomial> by_particles(s + 1);
    for (const auto& tau : all_configurations(s)) by_particles[tau.particles()] += f(tau).at_ab_one();
    for (std::size_t k = 0; k <= s; ++k) {
      ++r.cases;
      const Polynomial expected = q_eulerian(static_cast<int>(k + 1), static_cast<int>(s + 1));
      if (by_particles[k] != expected) {
        fail(r, {{"n", std::to_string(s)}, {"k", std::to_string(k)}, {"aggregate", by_particles[k].to_string()},
                 {"q_eulerian", expected.to_string()}});
        break;
      }
    }
  }
  return r;
}

const std::vector<NamedCheck>& all_checks() {
  static const std::vector<NamedCheck> checks = {
      {"qdiff", 7, check_qdiff},
      {"mono", 7, check_mono},
      {"qd-interpolation", 6, check_qd_interpolation},
      {"corner", 7, check_corner_recurrence},
      {"boundary", 7, check_boundary_recurrences},
      {"eulerian-aggregate", 7, check_eulerian_aggregate},
  };
  return checks;
}

std::string report_json(const std::vector<CheckResult>& results, int indent) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["scope"] = r.scope;
    j["passed"] = r.passed;
    j["cases"] = r.cases;
    if (r.counterexample) {
      j["counterexample"] = nlohmann::ordered_json(*r.counterexample);
    } else {
      j["counterexample"] = nullptr;
    }
    j["notes"] = r.notes;
    checks.push_back(std::move(j));
    all = all && r.passed;
  }
  nlohmann::ordered_json doc;
  doc["passed"] = all;
  doc["checks"] = std::move(checks);
  return doc.dump(indent);
}

}  // namespace pasep
