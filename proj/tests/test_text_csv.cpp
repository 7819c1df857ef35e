#include <gtest/gtest.h>

#include "dogenet/csv.hpp"
#include "dogenet/text.hpp"

using namespace dogenet;

TEST(Text, LowerAndTrim) {
  EXPECT_EQ(to_lower("Dandolo"), "dandolo");
  EXPECT_EQ(trim("  Corner \t"), "Corner");
  EXPECT_EQ(trim(""), "");
}

TEST(Text, SplitWords) {
  const auto w = split_words("  Pietro   II  Orseolo ");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[1], "II");
}

TEST(Csv, QuotedFieldsAndDoubledQuotes) {
  const auto t = parse_csv("name,note\n\"Corner, Marco\",\"said \"\"yes\"\"\"\r\nB,2\n");
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][0], "Corner, Marco");
  EXPECT_EQ(t.rows[0][1], "said \"yes\"");
  EXPECT_EQ(t.rows[1][1], "2");
}

TEST(Csv, EmbeddedNewline) {
  const auto t = parse_csv("a,b\n\"x\ny\",z\n");
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][0], "x\ny");
}

TEST(Csv, BomAndBlankLines) {
  const auto t = parse_csv("\xEF\xBB\xBFName,Tier\n\nDandolo,Apostoliche\n\n");
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.column("name"), 0u);
  EXPECT_EQ(t.column("TIER"), 1u);
  EXPECT_FALSE(t.column("missing"));
}

TEST(Csv, UnterminatedQuoteThrows) {
  EXPECT_THROW(parse_csv("a\n\"open\n"), std::runtime_error);
}

TEST(Csv, EscapeRoundTrip) {
  for (const std::string s : {"plain", "a,b", "say \"hi\"", "two\nlines"}) {
    const auto t = parse_csv("h\n" + csv_escape(s) + "\n");
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0][0], s);
  }
  EXPECT_EQ(csv_escape("plain"), "plain");
}

TEST(Csv, ReadFileMissing) {
  EXPECT_THROW(read_file("/nonexistent/doges.csv"), std::runtime_error);
}
