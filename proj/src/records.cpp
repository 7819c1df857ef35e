#include "dogenet/records.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dogenet/csv.hpp"
#include "dogenet/text.hpp"

namespace dogenet {

namespace {

constexpr std::array<std::string_view, 3> kPlaceParticles = {"di", "da", "de"};

// A year or year range: "1735", "1735-1741", "1735–1741" (en/em dash).
const std::regex& year_span_regex() {
  static const std::regex re(R"((\d{3,4})(?:\s*(?:-|\xE2\x80\x93|\xE2\x80\x94)\s*(\d{3,4}))?)");
  return re;
}

bool is_particle(std::string_view token) {
  const std::string lower = to_lower(token);
  return std::find(kPlaceParticles.begin(), kPlaceParticles.end(), lower) != kPlaceParticles.end();
}

bool is_roman_numeral(std::string_view token) {
  if (token.empty() || token.size() > 5) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return c == 'I' || c == 'V' || c == 'X' || c == 'L' || c == 'C';
  });
}

bool is_capitalized(std::string_view token) {
  if (token.empty()) return false;
  const auto c = static_cast<unsigned char>(token.front());
  // Non-ASCII leading bytes (accented capitals) are accepted.
  return std::isupper(c) || c >= 0x80;
}

std::string strip_parentheticals(std::string_view s) {
  std::string out;
  int depth = 0;
  for (char c : s) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (depth > 0) --depth;
    } else if (depth == 0) {
      out.push_back(c);
    }
  }
  return out;
}

struct Span {
  int start;
  int end;
};

// Parses a whole field as a year span; nullopt when it is not one.
std::optional<Span> parse_span(std::string_view field) {
  const std::string text(trim(field));
  std::smatch m;
  if (!std::regex_match(text, m, year_span_regex())) return std::nullopt;
  const int start = std::stoi(m[1].str());
  const int end = m[2].matched ? std::stoi(m[2].str()) : start;
  return Span{start, end};
}

std::optional<int> parse_year(std::string_view field) {
  const std::string text(trim(field));
  if (text.size() < 3 || text.size() > 4) return std::nullopt;
  if (!std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  return std::stoi(text);
}

}  // namespace

std::string_view role_name(Role role) {
  return role == Role::Doge ? "doge" : "dogaressa";
}

std::optional<Role> parse_role(std::string_view text) {
  const std::string lower = to_lower(trim(text));
  if (lower == "doge") return Role::Doge;
  if (lower == "dogaressa") return Role::Dogaressa;
  return std::nullopt;
}

std::optional<std::string> derive_surname(std::string_view name, Role role) {
  std::string text = strip_parentheticals(name);
  std::smatch m;
  if (role == Role::Doge) {
    if (std::regex_search(text, m, year_span_regex())) text = m.prefix().str();
  } else {
    text = std::regex_replace(text, year_span_regex(), " ");
  }

  std::vector<std::string> tokens;
  for (auto& word : split_words(text)) {
    while (!word.empty() && (word.back() == ',' || word.back() == ';')) word.pop_back();
    if (word.empty() || is_roman_numeral(word)) continue;
    tokens.push_back(std::move(word));
  }
  if (tokens.size() >= 2 && is_particle(tokens[tokens.size() - 2])) {
    return tokens[tokens.size() - 2] + " " + tokens.back();
  }
  if (tokens.size() < 2) return std::nullopt;
  return tokens.back();
}

bool is_toponym(std::string_view raw_surname) {
  const auto tokens = split_words(raw_surname);
  if (tokens.size() < 2) return false;
  return is_particle(tokens[tokens.size() - 2]) && is_capitalized(tokens.back());
}

ParseResult parse_records(std::string_view raw_table, Role role) {
  ParseResult result;
  if (trim(raw_table).empty()) return result;

  const CsvTable table = parse_csv(raw_table);
  const auto name_col = table.column("name");
  if (!name_col) {
    result.issues.push_back({0, "missing required column 'name'"});
    return result;
  }
  const auto surname_col = table.column("raw_surname");
  const auto role_col = table.column("role");
  const auto start_col = table.column("tenure_start");
  const auto end_col = table.column("tenure_end");
  const auto tenure_col = table.column("tenure");

  auto cell = [](const std::vector<std::string>& row, std::optional<std::size_t> col) -> std::string_view {
    if (!col || *col >= row.size()) return {};
    return trim(row[*col]);
  };

  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const std::size_t row_no = i + 1;
    auto fail = [&](std::string msg) { result.issues.push_back({row_no, std::move(msg)}); };

    PersonRecord rec;
    rec.row = row_no;
    rec.role = role;
    rec.full_name = std::string(cell(row, name_col));
    if (rec.full_name.empty()) {
      fail("empty name");
      continue;
    }

    if (const auto role_text = cell(row, role_col); !role_text.empty()) {
      const auto parsed = parse_role(role_text);
      if (!parsed) {
        fail("unknown role '" + std::string(role_text) + "'");
        continue;
      }
      if (*parsed != role) {
        fail("role '" + std::string(role_text) + "' in a " + std::string(role_name(role)) + " table");
        continue;
      }
    }

    // Tenure: explicit columns, then a combined column, then the name.
    const auto start_text = cell(row, start_col);
    const auto end_text = cell(row, end_col);
    const auto tenure_text = cell(row, tenure_col);
    bool ok = true;
    if (!start_text.empty() || !end_text.empty()) {
      const auto start = parse_year(start_text.empty() ? end_text : start_text);
      const auto end = parse_year(end_text.empty() ? start_text : end_text);
      if (!start || !end) {
        fail("malformed year in tenure_start/tenure_end");
        ok = false;
      } else {
        rec.tenure_start = *start;
        rec.tenure_end = *end;
      }
    } else if (!tenure_text.empty()) {
      if (const auto span = parse_span(tenure_text)) {
        rec.tenure_start = span->start;
        rec.tenure_end = span->end;
      } else {
        fail("malformed tenure '" + std::string(tenure_text) + "'");
        ok = false;
      }
    } else {
      std::smatch m;
      const std::string name = rec.full_name;
      if (std::regex_search(name, m, year_span_regex())) {
        rec.tenure_start = std::stoi(m[1].str());
        rec.tenure_end = m[2].matched ? std::stoi(m[2].str()) : rec.tenure_start;
      } else {
        rec.tenure_known = false;
      }
    }
    if (!ok) continue;
    if (rec.tenure_known && rec.tenure_start > rec.tenure_end) {
      fail("tenure ends before it starts");
      continue;
    }

    if (const auto given = cell(row, surname_col); !given.empty()) {
      rec.raw_surname = std::string(given);
    } else if (auto derived = derive_surname(rec.full_name, role)) {
      rec.raw_surname = std::move(*derived);
    } else {
      rec.surname_less = true;
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

AliasTable AliasTable::from_csv(std::string_view text) {
  AliasTable table;
  if (trim(text).empty()) return table;
  const CsvTable csv = parse_csv(text);
  const std::size_t variant_col = csv.column("variant").value_or(0);
  const std::size_t canonical_col = csv.column("canonical").value_or(1);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto& row = csv.rows[i];
    if (row.size() <= std::max(variant_col, canonical_col)) {
      throw std::invalid_argument("aliases: row " + std::to_string(i + 1) + " has too few fields");
    }
    table.add(trim(row[variant_col]), trim(row[canonical_col]));
  }
  return table;
}

void AliasTable::add(std::string_view variant, std::string_view canonical) {
  if (variant.empty() || canonical.empty()) throw std::invalid_argument("aliases: empty name");
  const std::string lv = to_lower(variant);
  const std::string lc = to_lower(canonical);
  if (lv == lc) {
    if (entries_.count(lc)) {
      throw std::invalid_argument("aliases: '" + std::string(canonical) + "' is both variant and canonical");
    }
    canonicals_[lc] = std::string(canonical);
    return;
  }
  if (canonicals_.count(lv)) {
    throw std::invalid_argument("aliases: '" + std::string(variant) + "' is both variant and canonical");
  }
  if (entries_.count(lc)) {
    throw std::invalid_argument("aliases: '" + std::string(canonical) + "' is both variant and canonical");
  }
  if (const auto it = entries_.find(lv); it != entries_.end() && it->second != canonical) {
    throw std::invalid_argument("aliases: '" + std::string(variant) + "' maps to two names");
  }
  entries_[lv] = std::string(canonical);
  canonicals_[lc] = std::string(canonical);
}

std::string AliasTable::canonicalize(std::string_view raw_surname) const {
  const auto it = entries_.find(to_lower(trim(raw_surname)));
  if (it == entries_.end()) return std::string(raw_surname);
  return it->second;
}

MatchResult match_couples(const std::vector<PersonRecord>& doges,
                          const std::vector<PersonRecord>& dogaresse,
                          int tolerance_years) {
  if (tolerance_years < 0) throw std::invalid_argument("tolerance_years must be >= 0");

  // Candidate order: earlier tenure first, then list order.
  std::vector<std::size_t> order(doges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return doges[a].tenure_start < doges[b].tenure_start;
  });

  MatchResult result;
  for (const auto& wife : dogaresse) {
    if (!wife.tenure_known) {
      result.unmatched.push_back(wife);
      continue;
    }
    const int lo = wife.tenure_start - tolerance_years;
    const int hi = wife.tenure_end + tolerance_years;

    const PersonRecord* best = nullptr;
    double best_score = -1.0;
    std::vector<const PersonRecord*> candidates;
    for (std::size_t idx : order) {
      const auto& doge = doges[idx];
      if (!doge.tenure_known) continue;
      const int inter_lo = std::max(lo, doge.tenure_start);
      const int inter_hi = std::min(hi, doge.tenure_end);
      if (inter_lo > inter_hi) continue;
      const int hull = std::max(hi, doge.tenure_end) - std::min(lo, doge.tenure_start) + 1;
      const double score = static_cast<double>(inter_hi - inter_lo + 1) / hull;
      candidates.push_back(&doge);
      if (score > best_score) {
        best_score = score;
        best = &doge;
      }
    }
    if (!best) {
      result.unmatched.push_back(wife);
      continue;
    }
    if (candidates.size() > 1) {
      std::ostringstream note;
      note << wife.full_name << " fits " << candidates.size() << " doges; chose " << best->full_name;
      result.ambiguities.push_back(note.str());
    }
    Marriage m;
    m.doge = *best;
    m.dogaressa = wife;
    m.doge_family = best->raw_surname;
    m.dogaressa_family = wife.raw_surname;
    m.match_year = std::max(best->tenure_start, wife.tenure_start);
    result.marriages.push_back(std::move(m));
  }
  return result;
}

std::vector<Marriage> filter_marriages(const std::vector<Marriage>& raw, const AliasTable& aliases) {
  std::vector<Marriage> kept;
  for (const auto& m : raw) {
    if (m.doge.surname_less || m.dogaressa.surname_less) continue;
    if (m.doge_family.empty() || m.dogaressa_family.empty()) continue;
    if (is_toponym(m.doge_family) || is_toponym(m.dogaressa_family)) continue;
    Marriage c = m;
    c.doge_family = aliases.canonicalize(m.doge_family);
    c.dogaressa_family = aliases.canonicalize(m.dogaressa_family);
    if (c.doge_family == c.dogaressa_family) continue;
    kept.push_back(std::move(c));
  }
  return kept;
}

CensusReport census(const std::vector<PersonRecord>& doges,
                    const std::vector<Marriage>& matched,
                    const std::vector<Marriage>& filtered,
                    const AliasTable& aliases) {
  CensusReport report;
  report.total_doges = doges.size();
  report.marriages_after_filters = filtered.size();

  std::set<std::size_t> married_rows;
  for (const auto& m : matched) married_rows.insert(m.doge.row);

  std::set<std::string> unmarried_families;
  std::set<std::string> married_families;
  for (const auto& d : doges) {
    const bool married = married_rows.count(d.row) > 0;
    if (!married) ++report.unmarried_doges;
    if (d.surname_less) {
      ++report.surname_less_doges;
      continue;
    }
    (married ? married_families : unmarried_families).insert(aliases.canonicalize(d.raw_surname));
  }
  report.doge_families_unmarried = unmarried_families.size();
  report.doge_families_married = married_families.size();
  for (const auto& f : married_families) {
    if (unmarried_families.count(f)) ++report.families_with_both_married_and_unmarried_doges;
  }

  std::set<std::string> as_doge;
  std::set<std::string> as_dogaressa;
  for (const auto& m : filtered) {
    as_doge.insert(m.doge_family);
    as_dogaressa.insert(m.dogaressa_family);
  }
  std::set<std::string> any = as_doge;
  any.insert(as_dogaressa.begin(), as_dogaressa.end());
  report.families_any_role = any.size();
  report.dogaressa_families = as_dogaressa.size();
  for (const auto& f : as_doge) {
    if (as_dogaressa.count(f)) ++report.families_both_roles;
  }
  return report;
}

}  // namespace dogenet
