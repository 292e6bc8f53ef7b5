#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pasep/tableaux.hpp"

using pasep::Diagram;
using pasep::Filling;
using pasep::InvalidParameter;
using pasep::PermutationTableau;
using pasep::Polynomial;
using pasep::TableauStats;

namespace {

Diagram D(const char* s) { return Diagram::parse(s); }
Polynomial P(const char* s) { return Polynomial::parse(s); }

pasep::Integer factorial(unsigned n) {
  pasep::Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Polynomial binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Polynomial();
  pasep::Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Polynomial(r);
}

// Column-transfer coefficient for a <= b.
Polynomial h(int a, int b) {
  Polynomial inner = Polynomial::a() * Polynomial::q(a - 1) * binom(b - 1, a - 1);
  for (int j = 0; j <= a - 2; ++j) inner += Polynomial::q(j) * binom(b - a + j, j);
  return Polynomial::b(a - b) * inner;
}

const char* kFigureFour =
    "10,9,9,8,5,2,0\n"
    "0110010101\n"
    "111101111\n"
    "000000000\n"
    "00000011\n"
    "00011\n"
    "11\n"
    "\n";

}  // namespace

TEST(Validity, Examples) {
  EXPECT_TRUE(pasep::is_valid(D("2,1"), {{0, 1}, {1}}));
  EXPECT_FALSE(pasep::is_valid(D("1,1"), {{0}, {0}}));
  EXPECT_FALSE(pasep::is_valid(D("2,2"), {{1, 1}, {1, 0}}));
  EXPECT_TRUE(pasep::is_valid(D("0"), {{}}));
}

TEST(Validity, DimensionMismatchThrows) {
  EXPECT_THROW(pasep::is_valid(D("2,1"), {{0, 1}}), InvalidParameter);
  EXPECT_THROW(pasep::is_valid(D("2,1"), {{0, 1}, {1, 1}}), InvalidParameter);
  EXPECT_THROW(pasep::is_valid(D("1"), {{2}}), InvalidParameter);
}

TEST(Stats, FigureFourTableau) {
  const PermutationTableau t = PermutationTableau::parse(kFigureFour);
  EXPECT_EQ(t.shape.expanse(), 17u);
  ASSERT_TRUE(pasep::is_valid(t.shape, t.filling));
  EXPECT_EQ(pasep::stats(t), (TableauStats{9, 5, 3}));
  EXPECT_EQ(pasep::unrestricted_rows(t), 4u);
}

TEST(Stats, SmallExamples) {
  EXPECT_EQ(pasep::stats({D("2,1"), {{1, 1}, {1}}}), (TableauStats{1, 2, 1}));
  EXPECT_EQ(pasep::stats({D("0,0"), {{}, {}}}), (TableauStats{0, 0, 1}));
  EXPECT_EQ(pasep::stat_monomial({1, 2, 1}), P("q*a^2*b"));
}

TEST(Stats, InvalidTableauThrows) {
  EXPECT_THROW(pasep::stats({D("1,1"), {{0}, {0}}}), InvalidParameter);
}

TEST(TableauText, RoundTrip) {
  const PermutationTableau t = PermutationTableau::parse(kFigureFour);
  EXPECT_EQ(t.to_string(), kFigureFour);
  EXPECT_EQ(PermutationTableau::parse(t.to_string()), t);
  EXPECT_THROW(PermutationTableau::parse(""), pasep::ParseError);
  EXPECT_THROW(PermutationTableau::parse("2,1\n01\n12\n"), pasep::ParseError);
  EXPECT_THROW(PermutationTableau::parse("2,1\n011\n1\n"), pasep::ParseError);
}

TEST(Enumerate, ExampleShape) {
  const auto all = pasep::enumerate(D("2,1"));
  ASSERT_EQ(all.size(), 3u);
  std::multiset<std::string> monomials;
  for (const auto& t : all) monomials.insert(pasep::stat_monomial(pasep::stats(t)).to_string());
  EXPECT_EQ(monomials, (std::multiset<std::string>{"a^2", "a*b", "q*a^2*b"}));
  // Row-major, 0 before 1.
  EXPECT_EQ(all[0].filling, (Filling{{0, 1}, {1}}));
  EXPECT_EQ(all[1].filling, (Filling{{1, 1}, {0}}));
  EXPECT_EQ(all[2].filling, (Filling{{1, 1}, {1}}));
}

TEST(Enumerate, SmallShapes) {
  EXPECT_EQ(pasep::enumerate(D("0")).size(), 1u);
  EXPECT_EQ(pasep::enumerate(D("1,1")).size(), 3u);
  EXPECT_EQ(pasep::enumerate(D("0,0,0")).size(), 1u);
}

TEST(Enumerate, MatchesBruteForceAndIsDuplicateFree) {
  for (std::size_t e = 1; e <= 7; ++e) {
    for (const auto& lambda : pasep::diagrams_of_expanse(e)) {
      const auto all = pasep::enumerate(lambda);
      std::set<std::string> distinct;
      for (const auto& t : all) {
        ASSERT_TRUE(pasep::is_valid(t.shape, t.filling));
        distinct.insert(t.to_string());
      }
      EXPECT_EQ(distinct.size(), all.size());
      EXPECT_EQ(all.size(), oracle::count_tableaux_by_brute_force(lambda.parts())) << lambda.to_string();
      EXPECT_EQ(pasep::genfun_shape(lambda), oracle::tableaux_by_brute_force(lambda.parts())) << lambda.to_string();
    }
  }
}

TEST(GenfunShape, Examples) {
  EXPECT_EQ(pasep::genfun_shape(D("2,1")), P("a^2 + a*b + q*a^2*b"));
  EXPECT_EQ(pasep::genfun_shape(D("1")), P("a"));
  EXPECT_EQ(pasep::genfun_shape(D("0,0")), P("b"));
}

TEST(GenfunExpanse, Examples) {
  EXPECT_EQ(pasep::genfun_expanse(4).to_string(),
            "a^3 + 2*a^2 + 2*a + a^2*b + 2*a*b + 2*b + a*b^2 + 2*b^2 + b^3 + q*a^2 + q*a^2*b + 4*q*a*b + "
            "q*a*b^2 + q*b^2 + q^2*a^2*b + q^2*a*b^2");
  EXPECT_EQ(pasep::genfun_expanse(1), Polynomial(1));
  EXPECT_EQ(pasep::genfun_expanse(2), P("a + b"));
  EXPECT_THROW(pasep::genfun_expanse(0), InvalidParameter);
}

TEST(GenfunExpanse, CountsPermutations) {
  for (unsigned n = 0; n <= 7; ++n) EXPECT_EQ(pasep::genfun_expanse(n + 1).eval(1, 1, 1), factorial(n + 1));
}

TEST(ByUnrestricted, Examples) {
  EXPECT_EQ(pasep::genfun_by_unrestricted(D("2,1")), (std::vector<Polynomial>{P("a^2"), P("a*b + q*a^2*b")}));
  EXPECT_EQ(pasep::genfun_by_unrestricted(D("0")), (std::vector<Polynomial>{Polynomial(1)}));
  EXPECT_EQ(pasep::genfun_by_unrestricted(D("0,0")), (std::vector<Polynomial>{Polynomial(), P("b")}));
}

TEST(ByUnrestricted, SumsToShapeAndCarriesBPower) {
  for (std::size_t e = 1; e <= 7; ++e) {
    for (const auto& lambda : pasep::diagrams_of_expanse(e)) {
      const auto parts = pasep::genfun_by_unrestricted(lambda);
      Polynomial total;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        total += parts[i];
        for (const auto& [m, c] : parts[i].terms()) EXPECT_EQ(m.b, static_cast<int>(i));
      }
      EXPECT_EQ(total, pasep::genfun_shape(lambda)) << lambda.to_string();
    }
  }
}

TEST(ByUnrestricted, ColumnTransferLaw) {
  for (std::size_t e = 1; e <= 6; ++e) {
    for (const auto& lambda : pasep::diagrams_of_expanse(e)) {
      auto widened = lambda.parts();
      for (int& p : widened) ++p;
      const auto before = pasep::genfun_by_unrestricted(lambda);
      const auto after = pasep::genfun_by_unrestricted(Diagram(widened));
      ASSERT_EQ(before.size(), after.size());
      for (int a = 1; a <= static_cast<int>(after.size()); ++a) {
        Polynomial expected;
        for (int b = a; b <= static_cast<int>(before.size()); ++b) expected += h(a, b) * before[b - 1];
        EXPECT_EQ(after[a - 1], expected) << lambda.to_string() << " a=" << a;
      }
    }
  }
}

TEST(ByUnrestricted, EmptyRowLaw) {
  for (std::size_t e = 1; e <= 7; ++e) {
    for (const auto& lambda : pasep::diagrams_of_expanse(e)) {
      auto longer = lambda.parts();
      longer.push_back(0);
      const auto before = pasep::genfun_by_unrestricted(lambda);
      const auto after = pasep::genfun_by_unrestricted(Diagram(longer));
      ASSERT_EQ(after.size(), before.size() + 1);
      EXPECT_TRUE(after[0].is_zero());
      for (std::size_t i = 0; i < before.size(); ++i) EXPECT_EQ(after[i + 1], Polynomial::b() * before[i]);
    }
  }
}

TEST(RowsCols, CountsByShapeClass) {
  // k rows and n-k columns, counted by weight.
  EXPECT_EQ(pasep::genfun_rows_cols(2, 3), P("3 + q"));
  EXPECT_EQ(pasep::genfun_rows_cols(1, 4), Polynomial(1));
  EXPECT_THROW(pasep::genfun_rows_cols(0, 3), InvalidParameter);
}
