#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dogenet/records.hpp"

using namespace dogenet;

namespace {

PersonRecord person(std::string name, std::string surname, Role role, int from, int to, std::size_t row) {
  PersonRecord p;
  p.full_name = std::move(name);
  p.raw_surname = std::move(surname);
  p.role = role;
  p.tenure_start = from;
  p.tenure_end = to;
  p.row = row;
  return p;
}

}  // namespace

TEST(DeriveSurname, DogeTextBeforeYears) {
  EXPECT_EQ(derive_surname("Pietro Candiano 887", Role::Doge), "Candiano");
  EXPECT_EQ(derive_surname("Pietro II Orseolo 991-1009", Role::Doge), "Orseolo");
  EXPECT_EQ(derive_surname("Enrico Dandolo (doge) 1192–1205", Role::Doge), "Dandolo");
}

TEST(DeriveSurname, DogaressaStripsYears) {
  EXPECT_EQ(derive_surname("Zilia Dandolo 1556-1559", Role::Dogaressa), "Dandolo");
  EXPECT_EQ(derive_surname("Costanza di Sicilia 1205-1229", Role::Dogaressa), "di Sicilia");
}

TEST(DeriveSurname, SingleTokenIsSurnameLess) {
  EXPECT_FALSE(derive_surname("Obelerio 804-811", Role::Doge));
  EXPECT_FALSE(derive_surname("Carosio", Role::Doge));
}

TEST(Toponym, Detection) {
  EXPECT_TRUE(is_toponym("di Sicilia"));
  EXPECT_TRUE(is_toponym("da Prata"));
  EXPECT_FALSE(is_toponym("Dandolo"));
  EXPECT_FALSE(is_toponym("da ponte"));
}

TEST(ParseRecords, ColumnsAndDerivedSurname) {
  const auto r = parse_records(
      "name,role,tenure_start,tenure_end\n"
      "Enrico Dandolo,doge,1192,1205\n"
      "Obelerio,doge,804,811\n",
      Role::Doge);
  ASSERT_TRUE(r.issues.empty());
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[0].raw_surname, "Dandolo");
  EXPECT_EQ(r.records[0].tenure_end - r.records[0].tenure_start, 13);
  EXPECT_TRUE(r.records[1].surname_less);
}

TEST(ParseRecords, TenureFromNameOrColumn) {
  const auto r = parse_records(
      "name,tenure\n"
      "Pietro Candiano 887,\n"
      "Marino Grimani,1595–1605\n"
      "Anonymous Person,\n",
      Role::Doge);
  ASSERT_TRUE(r.issues.empty());
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0].tenure_start, 887);
  EXPECT_EQ(r.records[0].tenure_end, 887);
  EXPECT_EQ(r.records[1].tenure_end, 1605);
  EXPECT_FALSE(r.records[2].tenure_known);
}

TEST(ParseRecords, RowDiagnostics) {
  const auto r = parse_records(
      "name,role,tenure_start,tenure_end\n"
      "Good Doge,doge,1100,1110\n"
      "Wrong Role,dogaressa,1100,1110\n"
      "Bad Years,doge,11x0,1110\n"
      "Backwards Dates,doge,1120,1110\n",
      Role::Doge);
  EXPECT_EQ(r.records.size(), 1u);
  ASSERT_EQ(r.issues.size(), 3u);
  EXPECT_EQ(r.issues[0].row, 2u);
  EXPECT_EQ(r.issues[1].row, 3u);
  EXPECT_EQ(r.issues[2].row, 4u);
}

TEST(ParseRecords, MissingNameColumn) {
  const auto r = parse_records("surname\nDandolo\n", Role::Doge);
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].row, 0u);
}

TEST(ParseRecords, EmptyInput) {
  const auto r = parse_records("", Role::Doge);
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.issues.empty());
}

TEST(Aliases, SeedExamples) {
  const auto t = AliasTable::from_csv(
      "variant,canonical\nCornaro,Corner\nMastropiero,Malipiero\nGradenico,Gradenigo\nMichele,Michel\n");
  EXPECT_EQ(t.canonicalize("Cornaro"), "Corner");
  EXPECT_EQ(t.canonicalize("Mastropiero"), "Malipiero");
  EXPECT_EQ(t.canonicalize("Gradenico"), "Gradenigo");
  EXPECT_EQ(t.canonicalize("Michele"), "Michel");
  EXPECT_EQ(t.canonicalize("cornaro"), "Corner");
  EXPECT_EQ(t.canonicalize("Dandolo"), "Dandolo");
}

TEST(Aliases, Idempotent) {
  const auto t = AliasTable::from_csv("variant,canonical\nCornaro,Corner\nBadoer,Badoero\n");
  for (const std::string s : {"Cornaro", "Corner", "Badoer", "Contarini"}) {
    EXPECT_EQ(t.canonicalize(t.canonicalize(s)), t.canonicalize(s));
  }
}

TEST(Aliases, ChainsAndConflictsRejected) {
  AliasTable t;
  t.add("Cornaro", "Corner");
  EXPECT_THROW(t.add("Corner", "Cornelio"), std::invalid_argument);
  EXPECT_THROW(t.add("Cornaro", "Cornelio"), std::invalid_argument);
  EXPECT_THROW(t.add("Ca", "Cornaro"), std::invalid_argument);
  EXPECT_NO_THROW(t.add("Cornaro", "Corner"));
}

TEST(MatchCouples, OverlapWithTolerance) {
  const std::vector<PersonRecord> doges{
      person("Lorenzo Priuli", "Priuli", Role::Doge, 1556, 1559, 1),
      person("Girolamo Priuli", "Priuli", Role::Doge, 1559, 1567, 2),
  };
  const std::vector<PersonRecord> wives{
      person("Zilia Dandolo", "Dandolo", Role::Dogaressa, 1556, 1559, 1),
      person("Late Wife", "Corner", Role::Dogaressa, 1568, 1570, 2),
      person("Far Wife", "Morosini", Role::Dogaressa, 1600, 1601, 3),
  };
  const auto r = match_couples(doges, wives, 1);
  ASSERT_EQ(r.marriages.size(), 2u);
  EXPECT_EQ(r.marriages[0].doge.full_name, "Lorenzo Priuli");
  EXPECT_EQ(r.marriages[0].match_year, 1556);
  EXPECT_EQ(r.marriages[1].doge.full_name, "Girolamo Priuli");
  ASSERT_EQ(r.unmatched.size(), 1u);
  EXPECT_EQ(r.unmatched[0].full_name, "Far Wife");
  EXPECT_FALSE(r.ambiguities.empty());

  const auto strict = match_couples(doges, wives, 0);
  EXPECT_EQ(strict.marriages.size(), 1u);
}

TEST(MatchCouples, NegativeToleranceRejected) {
  EXPECT_THROW(match_couples({}, {}, -1), std::invalid_argument);
}

TEST(MatchCouples, Deterministic) {
  std::mt19937 rng(7);
  std::vector<PersonRecord> doges;
  std::vector<PersonRecord> wives;
  for (int i = 0; i < 40; ++i) {
    const int from = 800 + static_cast<int>(rng() % 900);
    doges.push_back(person("D " + std::to_string(i), "F" + std::to_string(i % 9), Role::Doge, from,
                           from + static_cast<int>(rng() % 20), i + 1));
    const int w = 800 + static_cast<int>(rng() % 900);
    wives.push_back(person("W " + std::to_string(i), "G" + std::to_string(i % 7), Role::Dogaressa, w,
                           w + static_cast<int>(rng() % 10), i + 1));
  }
  const auto a = match_couples(doges, wives);
  const auto b = match_couples(doges, wives);
  EXPECT_EQ(a.marriages, b.marriages);
  EXPECT_EQ(a.ambiguities, b.ambiguities);
}

TEST(FilterMarriages, DropsSameFamilyToponymsAndSurnameLess) {
  const auto aliases = AliasTable::from_csv("variant,canonical\nCornaro,Corner\n");
  auto mk = [](std::string df, std::string wf, bool surname_less = false) {
    Marriage m;
    m.doge = person("d", df, Role::Doge, 1000, 1001, 1);
    m.doge.surname_less = surname_less;
    m.dogaressa = person("w", wf, Role::Dogaressa, 1000, 1001, 1);
    m.doge_family = df;
    m.dogaressa_family = wf;
    return m;
  };
  const std::vector<Marriage> raw{
      mk("Ziani", "di Sicilia"), mk("Corner", "Cornaro"), mk("", "Dandolo", true),
      mk("Priuli", "Dandolo"),   mk("Tiepolo", "da Prata"), mk("Cornaro", "Mocenigo"),
  };
  const auto kept = filter_marriages(raw, aliases);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].doge_family, "Priuli");
  EXPECT_EQ(kept[1].doge_family, "Corner");
  for (const auto& m : kept) {
    EXPECT_NE(m.doge_family, m.dogaressa_family);
    EXPECT_FALSE(is_toponym(m.doge_family));
    EXPECT_FALSE(is_toponym(m.dogaressa_family));
  }
}

TEST(Census, SmallDataset) {
  const std::vector<PersonRecord> doges{
      person("A Dandolo", "Dandolo", Role::Doge, 1000, 1005, 1),
      person("B Dandolo", "Dandolo", Role::Doge, 1010, 1015, 2),
      person("C Priuli", "Priuli", Role::Doge, 1020, 1025, 3),
      person("D Cornaro", "Cornaro", Role::Doge, 1030, 1035, 4),
  };
  const std::vector<PersonRecord> wives{
      person("W Priuli", "Priuli", Role::Dogaressa, 1000, 1005, 1),
      person("X Corner", "Corner", Role::Dogaressa, 1020, 1025, 2),
      person("Y Morosini", "Morosini", Role::Dogaressa, 1030, 1035, 3),
  };
  const auto aliases = AliasTable::from_csv("variant,canonical\nCornaro,Corner\n");
  const auto matched = match_couples(doges, wives, 0);
  const auto kept = filter_marriages(matched.marriages, aliases);
  const auto c = census(doges, matched.marriages, kept, aliases);
  EXPECT_EQ(c.total_doges, 4u);
  EXPECT_EQ(c.unmarried_doges, 1u);
  EXPECT_EQ(c.marriages_after_filters, 3u);
  // Doge families: Dandolo, Priuli, Corner; dogaressa families: Priuli, Corner, Morosini.
  EXPECT_EQ(c.families_both_roles, 2u);
  EXPECT_EQ(c.families_any_role, 4u);
  EXPECT_EQ(c.doge_families_married, 3u);
  EXPECT_EQ(c.doge_families_unmarried, 1u);
  EXPECT_EQ(c.families_with_both_married_and_unmarried_doges, 1u);
  EXPECT_LE(c.families_both_roles, c.families_any_role);
}
