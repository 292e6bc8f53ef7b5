#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pasep/ansatz.hpp"
#include "pasep/motzkin.hpp"
#include "pasep/tableaux.hpp"

using pasep::AnsatzKind;
using pasep::AnsatzSection;
using pasep::Configuration;
using pasep::Generator;
using pasep::Polynomial;

namespace {

Configuration C(const char* s) { return Configuration::parse(s); }
Polynomial P(const char* s) { return Polynomial::parse(s); }

}  // namespace

TEST(QInteger, Examples) {
  EXPECT_EQ(pasep::qint(1), Polynomial(1));
  EXPECT_EQ(pasep::qint(3), P("1 + q + q^2"));
  EXPECT_TRUE(pasep::qint(0).is_zero());
  EXPECT_THROW(pasep::qint(-1), pasep::InvalidParameter);
}

TEST(Build, TableauEntries) {
  // Row 2, column 1 of E1 is alpha^-1 beta = a / b.
  EXPECT_EQ(pasep::build(AnsatzKind::Tableau, Generator::E, 2)(2, 1), P("a*b^-1"));
  EXPECT_EQ(pasep::build(AnsatzKind::Tableau, Generator::E, 3)(3, 3), P("1 + q + q^2*a"));
  EXPECT_EQ(pasep::build(AnsatzKind::Tableau, Generator::E, 3)(1, 1), P("a"));
  EXPECT_EQ(pasep::build(AnsatzKind::Tableau, Generator::E, 3)(3, 2), P("b^-1 + 2*q*a*b^-1"));
  EXPECT_TRUE(pasep::build(AnsatzKind::Tableau, Generator::E, 3)(1, 2).is_zero());
  const auto d = pasep::build(AnsatzKind::Tableau, Generator::D, 4);
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) EXPECT_EQ(d(i, j), j == i + 1 ? P("b") : Polynomial());
  }
}

TEST(Build, MotzkinEntries) {
  EXPECT_EQ(pasep::build(AnsatzKind::Motzkin, Generator::D, 3)(2, 3), P("1 + q + q^2"));
  EXPECT_EQ(pasep::build(AnsatzKind::Motzkin, Generator::D, 3)(2, 2), P("1 + q"));
  EXPECT_EQ(pasep::build(AnsatzKind::Motzkin, Generator::E, 3)(3, 2), P("1 + q"));
  EXPECT_TRUE(pasep::build(AnsatzKind::Motzkin, Generator::E, 3)(2, 3).is_zero());
}

TEST(Build, IndexOutOfRange) {
  const auto d = pasep::build(AnsatzKind::Tableau, Generator::D, 2);
  EXPECT_THROW(d(3, 1), std::out_of_range);
  EXPECT_THROW(d(0, 1), std::out_of_range);
  EXPECT_THROW(pasep::TruncatedMatrix(0), pasep::InvalidParameter);
}

TEST(AnsatzEval, Examples) {
  EXPECT_EQ(pasep::ansatz_eval(AnsatzKind::Tableau, C("010")).to_string(), "a^2 + a*b + q*a^2*b");
  EXPECT_EQ(pasep::ansatz_eval(AnsatzKind::Tableau, C("")), Polynomial(1));
  EXPECT_EQ(pasep::ansatz_eval(AnsatzKind::Motzkin, C("10")), P("2 + q"));
}

TEST(AnsatzEval, TruncationTooSmallThrows) {
  EXPECT_THROW(pasep::ansatz_eval(AnsatzKind::Tableau, C("010"), 4), pasep::TruncationError);
  EXPECT_NO_THROW(pasep::ansatz_eval(AnsatzKind::Tableau, C("010"), 5));
}

TEST(PartitionFunction, Examples) {
  const Polynomial expected = P("a^3 + 2*a^2 + 2*a + a^2*b + 2*a*b + 2*b + a*b^2 + 2*b^2 + b^3") +
                              Polynomial::q() * P("a^2 + a^2*b + 4*a*b + a*b^2 + b^2") +
                              Polynomial::q(2) * P("a^2*b + a*b^2");
  EXPECT_EQ(pasep::partition_function(AnsatzKind::Tableau, 3), expected);
  EXPECT_EQ(pasep::partition_function(AnsatzKind::Tableau, 0), Polynomial(1));
  EXPECT_EQ(pasep::partition_function(AnsatzKind::Tableau, 1), P("a + b"));
  EXPECT_EQ(pasep::partition_function(AnsatzKind::Motzkin, 3), P("14 + 8*q + 2*q^2"));
}

TEST(TopRow, Examples) {
  const auto row = pasep::top_row(C("010"));
  ASSERT_EQ(row.size(), 5u);
  const auto by_rows = pasep::genfun_by_unrestricted(pasep::Diagram::parse("2,1"));
  for (std::size_t i = 0; i < row.size(); ++i) {
    EXPECT_EQ(row[i], i < by_rows.size() ? by_rows[i] : Polynomial());
  }
  EXPECT_EQ(pasep::top_row(C("")), (std::vector<Polynomial>{Polynomial(1), Polynomial()}));
  EXPECT_EQ(pasep::top_row(C("1")), (std::vector<Polynomial>{Polynomial(), P("b"), Polynomial()}));
}

TEST(TopRow, EqualsUnrestrictedRefinement) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& tau : pasep::all_configurations(n)) {
      const auto row = pasep::top_row(tau);
      const auto by_rows = pasep::genfun_by_unrestricted(pasep::lambda_of_tau(tau));
      for (std::size_t i = 0; i < row.size(); ++i) {
        ASSERT_EQ(row[i], i < by_rows.size() ? by_rows[i] : Polynomial()) << tau.to_string() << " i=" << i;
      }
    }
  }
}

TEST(Relations, HoldForBothKinds) {
  for (std::size_t m = 2; m <= 12; ++m) {
    EXPECT_TRUE(pasep::check_relations(AnsatzKind::Tableau, m).ok) << m;
    EXPECT_TRUE(pasep::check_relations(AnsatzKind::Motzkin, m).ok) << m;
  }
}

TEST(Relations, DetectCorruptedEntry) {
  AnsatzSection section = AnsatzSection::build(AnsatzKind::Tableau, 8);
  section.e(3, 2) += Polynomial::q();
  const auto report = pasep::check_relations(section);
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.failure.empty());

  AnsatzSection wrong_v = AnsatzSection::build(AnsatzKind::Motzkin, 6);
  wrong_v.v[1] = Polynomial(1);
  EXPECT_FALSE(pasep::check_relations(wrong_v).ok);

  AnsatzSection wrong_w = AnsatzSection::build(AnsatzKind::Tableau, 6);
  wrong_w.we_eigenvalue = Polynomial::b();
  EXPECT_FALSE(pasep::check_relations(wrong_w).ok);
}

TEST(Relations, PositiveBPowersBelowDiagonalAreNotASolution) {
  // E1 carries beta^(i-j) = b^(j-i); using b^(i-j) instead breaks DE - qED = D + E.
  AnsatzSection section = AnsatzSection::build(AnsatzKind::Tableau, 6);
  for (std::size_t i = 1; i <= 6; ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      const int shift = 2 * static_cast<int>(i - j);
      section.e(i, j) = Polynomial::b(shift) * section.e(i, j);
    }
  }
  EXPECT_FALSE(pasep::check_relations(section).ok);
}

TEST(AnsatzProperties, TruncationStability) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const pasep::AnsatzEvaluator tight(AnsatzKind::Tableau, n + 2);
    const pasep::AnsatzEvaluator loose(AnsatzKind::Tableau, n + 5);
    for (const auto& tau : pasep::all_configurations(n)) ASSERT_EQ(tight.eval(tau), loose.eval(tau)) << tau.to_string();
  }
}

TEST(AnsatzProperties, AgreesWithNaiveMatrixProducts) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& tau : pasep::all_configurations(n)) {
      EXPECT_EQ(pasep::ansatz_eval(AnsatzKind::Tableau, tau), oracle::naive_ansatz(true, tau, n + 2)) << tau.to_string();
      EXPECT_EQ(pasep::ansatz_eval(AnsatzKind::Motzkin, tau), oracle::naive_ansatz(false, tau, n + 2)) << tau.to_string();
    }
  }
}

TEST(AnsatzProperties, TableauTheoremForAllConfigurations) {
  for (std::size_t n = 0; n <= 7; ++n) {
    const pasep::AnsatzEvaluator evaluator(AnsatzKind::Tableau, n + 2);
    Polynomial z;
    for (const auto& tau : pasep::all_configurations(n)) {
      const Polynomial f = evaluator.eval(tau);
      ASSERT_TRUE(f.is_polynomial());
      ASSERT_EQ(f, pasep::genfun_shape(pasep::lambda_of_tau(tau))) << tau.to_string();
      z += f;
    }
    EXPECT_EQ(z, evaluator.partition_function(n));
    EXPECT_EQ(z, pasep::genfun_expanse(n + 1));
  }
}

TEST(AnsatzProperties, MotzkinSolutionIsTableauSolutionAtUnitRates) {
  for (std::size_t n = 0; n <= 7; ++n) {
    const pasep::AnsatzEvaluator tableau(AnsatzKind::Tableau, n + 2);
    const pasep::AnsatzEvaluator motzkin(AnsatzKind::Motzkin, n + 2);
    for (const auto& tau : pasep::all_configurations(n)) {
      ASSERT_EQ(motzkin.eval(tau), tableau.eval(tau).at_ab_one()) << tau.to_string();
    }
  }
}
