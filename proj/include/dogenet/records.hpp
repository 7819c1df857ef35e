#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dogenet {

enum class Role { Doge, Dogaressa };

std::string_view role_name(Role role);
std::optional<Role> parse_role(std::string_view text);

/// One row of an office-holder or spouse list.
struct PersonRecord {
  std::string full_name;
  /// Surname expression as written ("Pisani", "di Sicilia"); empty when
  /// surname_less is set.
  std::string raw_surname;
  Role role = Role::Doge;
  int tenure_start = 0;
  int tenure_end = 0;
  bool surname_less = false;
  /// False for doges whose dates are missing from the source list; such
  /// records take no part in matching or reign statistics.
  bool tenure_known = true;
  /// 1-based data row in the source table; identifies the person.
  std::size_t row = 0;

  friend bool operator==(const PersonRecord&, const PersonRecord&) = default;
};

struct ParseIssue {
  std::size_t row = 0;
  std::string message;
};

struct ParseResult {
  std::vector<PersonRecord> records;
  std::vector<ParseIssue> issues;
};

/// Parses a delimited table of people holding `role`.
///
/// Recognised header columns (case-insensitive): `name` (required),
/// `raw_surname`, `role`, `tenure_start`, `tenure_end`, `tenure`. Dates may
/// also be embedded in the name ("Alvise Pisani 1735-1741"). When
/// `raw_surname` is absent or blank the surname is derived from the name:
/// for doges the last name token before the dates, for dogaresse the final
/// expression of the name. A single-year tenure is stored as start = end.
///
/// Row-level problems (bad years, role mismatch) are collected in `issues`
/// and the row is skipped. A missing `name` column is reported as a single
/// issue on row 0.
ParseResult parse_records(std::string_view raw_table, Role role);

/// Derives the surname expression from a name string, or nullopt when the
/// name carries only a given name.
std::optional<std::string> derive_surname(std::string_view name, Role role);

/// True when the surname expression is a place-of-origin construction,
/// e.g. "di Sicilia" or "da Prata".
bool is_toponym(std::string_view raw_surname);

/// Case-insensitive variant -> canonical surname map.
class AliasTable {
 public:
  AliasTable() = default;

  /// Loads `variant,canonical` rows. Throws std::invalid_argument if a
  /// canonical target is itself listed as a variant of another name, or a
  /// variant maps to two different targets.
  static AliasTable from_csv(std::string_view text);

  /// Adds a pair, enforcing the same rules as from_csv.
  void add(std::string_view variant, std::string_view canonical);

  std::string canonicalize(std::string_view raw_surname) const;

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  // lower-cased variant -> canonical spelling
  std::map<std::string, std::string> entries_;
  // lower-cased canonical names
  std::map<std::string, std::string> canonicals_;
};

inline std::string canonicalize(std::string_view raw_surname, const AliasTable& aliases) {
  return aliases.canonicalize(raw_surname);
}

struct Marriage {
  PersonRecord doge;
  PersonRecord dogaressa;
  std::string doge_family;
  std::string dogaressa_family;
  int match_year = 0;

  friend bool operator==(const Marriage&, const Marriage&) = default;
};

struct MatchResult {
  std::vector<Marriage> marriages;
  std::vector<PersonRecord> unmatched;
  /// Human-readable notes for dogaresse whose dates fit more than one doge.
  std::vector<std::string> ambiguities;
};

/// Pairs every dogaressa with the doge whose tenure overlaps hers once her
/// interval is widened by `tolerance_years` on both sides. Among several
/// candidates the one with the largest overlap (intersection over union of
/// the year ranges) wins; ties go to the earlier doge. Family fields hold
/// the raw surnames; filter_marriages canonicalizes them.
///
/// Throws std::invalid_argument for a negative tolerance.
MatchResult match_couples(const std::vector<PersonRecord>& doges,
                          const std::vector<PersonRecord>& dogaresse,
                          int tolerance_years = 1);

/// Canonicalizes both families and drops same-family, toponym and
/// surname-less couples. Order is preserved.
std::vector<Marriage> filter_marriages(const std::vector<Marriage>& raw,
                                       const AliasTable& aliases);

struct CensusReport {
  std::size_t total_doges = 0;
  std::size_t unmarried_doges = 0;
  std::size_t marriages_after_filters = 0;
  std::size_t families_both_roles = 0;
  std::size_t families_any_role = 0;
  std::size_t doge_families_unmarried = 0;
  std::size_t doge_families_married = 0;
  std::size_t families_with_both_married_and_unmarried_doges = 0;
  /// Distinct dogaressa families among the filtered couples.
  std::size_t dogaressa_families = 0;
  std::size_t surname_less_doges = 0;
};

/// Census over the doge list. `matched` are the couples before filtering
/// (a doge counts as married if any dogaressa matched him); `filtered` are
/// the couples that survive filter_marriages.
CensusReport census(const std::vector<PersonRecord>& doges,
                    const std::vector<Marriage>& matched,
                    const std::vector<Marriage>& filtered,
                    const AliasTable& aliases);

}  // namespace dogenet
