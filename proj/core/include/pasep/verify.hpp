#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pasep {

/// Machine-readable witness, e.g. {"tau": "1010", "tau2": "1100", "difference": "..."}.
using Witness = std::map<std::string, std::string>;

struct CheckResult {
  std::string name;
  std::string scope;                   ///< swept parameters, e.g. "n<=6, symbolic a,b"
  bool passed = true;
  std::optional<Witness> counterexample;  ///< present whenever passed is false
  std::vector<std::string> notes;      ///< informational findings (expected counterexamples and the like)
  std::size_t cases = 0;               ///< identities checked
};

// Every check sweeps all system sizes up to and including n.

/// f(tau') - q^d f(tau) >= 0 coefficient-wise for every tau < tau', d the box difference; symbolic a, b.
CheckResult check_qdiff(std::size_t n);

/// f(tau') - f(tau) >= 0 at a = b = 1; also confirms that f4(1100) - f4(1010) has a
/// negative coefficient once a and b are kept symbolic.
CheckResult check_mono(std::size_t n);

/// f(tau') - q^d f(tau) >= 0 at a = b = 1 for every 0 <= d <= box difference.
CheckResult check_qd_interpolation(std::size_t n);

/// f(..1,0..) = f(..1..) + q f(..0,1..) + f(..0..), all by the ansatz, plus the diagram form
/// F_lambda = F_(column removed) + F_(row removed) + q F_(box removed) by tableau enumeration.
CheckResult check_corner_recurrence(std::size_t n);

/// f(tau, 1) = b f(tau) and f(0, tau) = a f(tau) via the ansatz, and the matching diagram
/// identities (empty row appended, first row lengthened) via tableau enumeration.
CheckResult check_boundary_recurrences(std::size_t n);

/// Sum over tau with k particles of f(tau) at a = b = 1 equals E^_{k+1,n+1}(q).
CheckResult check_eulerian_aggregate(std::size_t n);

struct NamedCheck {
  std::string name;
  std::size_t max_n;  ///< largest size the check supports
  std::function<CheckResult(std::size_t)> run;
};

/// qdiff, mono, qd-interpolation, corner, boundary, eulerian-aggregate.
const std::vector<NamedCheck>& all_checks();

/// {"passed": bool, "checks": [ {name, scope, passed, cases, counterexample, notes}, ... ]}.
std::string report_json(const std::vector<CheckResult>& results, int indent = 2);

}  // namespace pasep
