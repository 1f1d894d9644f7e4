#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "permpoly/errors.hpp"
#include "permpoly/field_table.hpp"
#include "permpoly/verify.hpp"

using namespace permpoly;

namespace {

FieldTable parse(const std::string& text) {
  std::istringstream in(text);
  return FieldTable::parse(in);
}

}  // namespace

TEST(FieldTable, ParsesEntriesCommentsAndBlankLines) {
  const auto t = parse("# overrides\n\nm=3 poly=0xd\n  m=8 poly=0x11d  \r\n");
  EXPECT_EQ(t.lookup(3), 0xdu);
  EXPECT_EQ(t.lookup(8), 0x11du);
  EXPECT_FALSE(t.lookup(4).has_value());
  EXPECT_EQ(t.make_field(3).reduction(), 0xdu);
  EXPECT_EQ(t.make_field(4).reduction(), 0x13u);
}

TEST(FieldTable, RejectsBadLines) {
  EXPECT_THROW(parse("m=3 poly=13\n"), ParseError);
  EXPECT_THROW(parse("degree 3\n"), ParseError);
  EXPECT_THROW(parse("m=4 poly=0x15\n"), ReducibleModulus);
  EXPECT_THROW(parse("m=3 poly=0x13\n"), UnsupportedDegree);
  EXPECT_THROW(parse("m=30 poly=0x3\n"), UnsupportedDegree);
  EXPECT_TRUE(parse("").empty());
}

TEST(FieldTable, ChecksStillPassUnderAlternativeModulus) {
  FieldTable t;
  t.set(4, 0x19);  // X^4 + X^3 + 1
  t.set(5, 0x3d);
  const auto f = t.make_field(4);
  EXPECT_EQ(f.reduction(), 0x19u);
  for (unsigned k : {1u, 3u}) {
    for (const auto& r : check_main_theorem(f, k)) EXPECT_TRUE(r.agrees());
  }
  EXPECT_TRUE(check_fgprop(t.make_field(5), 2).passed);
}

TEST(FieldTable, LoadsFromEnvironment) {
  const auto path = std::filesystem::temp_directory_path() / "permpoly_field_table_test.txt";
  {
    std::ofstream out(path);
    out << "m=5 poly=0x2f\n";
  }
  ::setenv(kFieldTableEnv, path.c_str(), 1);
  const auto t = FieldTable::from_environment();
  EXPECT_EQ(t.lookup(5), 0x2fu);
  ::setenv(kFieldTableEnv, "", 1);
  EXPECT_TRUE(FieldTable::from_environment().empty());
  ::unsetenv(kFieldTableEnv);
  EXPECT_TRUE(FieldTable::from_environment().empty());
  EXPECT_THROW(FieldTable::load(path.string() + ".missing"), ParseError);
  std::filesystem::remove(path);
}
