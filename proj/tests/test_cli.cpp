#include "common.hpp"
#include "hodge/emit.hpp"

#include <gtest/gtest.h>

using namespace hodge;
using testing_support::fixture;
using testing_support::fixture_path;

namespace {

SpecError parse_error(const std::string& text)
{
  try {
    parse_spec(text, "t.spec");
  } catch (const SpecError& e) {
    return e;
  }
  ADD_FAILURE() << "no SpecError for:\n" << text;
  return SpecError("t.spec", 0, "", "");
}

ResultTable hc_table(const Fixture& f, int p)
{
  ResultTable t;
  t.command = "hodge-hc";
  t.input = f.spec.name;
  t.input_hash = input_hash(f.spec.text);
  t.route = "bicomplex";
  t.truncation = {f.max_weight, 3};
  for (const auto& r : cyclic_hodge(*f.columns, p, t.truncation)) t.rows.push_back(row_from(r));
  return t;
}

}  // namespace

TEST(SpecFile, ErrorsNameLineAndField)
{
  SpecError a = parse_error("kind lie-algebra\nname t\n[basis]\nx 0\ny zero\n");
  EXPECT_EQ(a.line(), 5);
  EXPECT_EQ(a.field(), "basis");
  EXPECT_NE(std::string(a.what()).find("t.spec:5"), std::string::npos);

  SpecError b = parse_error("kind lie-algebra\nname t\n[basis]\nx 0\n[bracket]\nx q = x\n");
  EXPECT_EQ(b.line(), 6);

  SpecError c = parse_error("kind monoid\n");
  EXPECT_EQ(c.line(), 1);
  EXPECT_EQ(c.field(), "kind");
}

TEST(SpecFile, BadJacobiIsReportedAtLoad)
{
  // [x,y] = x, [y,z] = y, [z,x] = z fails Jacobi
  SpecError e = parse_error("kind lie-algebra\nname bad\n[basis]\nx 0\ny 0\nz 0\n[bracket]\nx y = x\ny z = y\nz x = z\n");
  EXPECT_EQ(e.line(), 7);
  EXPECT_EQ(e.field(), "bracket");
  EXPECT_NE(std::string(e.what()).find("Jacobi"), std::string::npos);
}

TEST(SpecFile, AllFixturesMaterialize)
{
  for (const char* name :
       {"sl2", "sl2-unimodular", "abelian1", "abelian2", "nonabelian2", "necklace2", "s2dual"}) {
    auto f = fixture(name, 4);
    EXPECT_EQ(f->spec.name, name);
    EXPECT_FALSE(validation_summary(*f).empty()) << name;
    if (f->spec.has_pairing) EXPECT_TRUE(f->poisson) << name;
  }
}

TEST(Emit, FormatNames)
{
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_EQ(parse_format("text"), Format::text);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Emit, HashIsStableAndSensitive)
{
  EXPECT_EQ(input_hash(""), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(input_hash("a"), "fnv1a64:af63dc4c8601ec8c");
  EXPECT_NE(input_hash("kind lie-algebra"), input_hash("kind lie-algebra "));
}

TEST(Emit, PolynomialRingTable)
{
  auto f = fixture("abelian1");
  for (int p = 1; p <= 3; ++p) {
    ResultTable t = hc_table(*f, p);
    ASSERT_EQ(t.rows.size(), 4u);
    EXPECT_EQ(t.rows[0].dim, 1u);
    EXPECT_EQ(t.rows[0].by_weight, (std::map<int, std::size_t>{{p, 1}}));
    for (std::size_t n = 1; n < 4; ++n) EXPECT_EQ(t.rows[n].dim, 0u);
    std::string csv = emit(t, Format::csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,degree,dim,safe");
    EXPECT_NE(csv.find(std::to_string(p) + ",0,1,true"), std::string::npos);
  }
}

TEST(Emit, JsonRoundTrip)
{
  auto f = fixture("abelian2");
  ResultTable t = hc_table(*f, 2);
  t.notes = {{"z", "last"}, {"a", "first"}};
  t.rows[0].representatives = {"[x,y]"};
  std::string j = emit(t, Format::json);
  ResultTable back = parse_table_json(j);
  EXPECT_EQ(back, t);
  EXPECT_EQ(emit(back, Format::json), j);
  EXPECT_LT(j.find("\"z\""), j.find("\"a\""));

  ResultTable empty;
  empty.command = "validate";
  EXPECT_EQ(parse_table_json(emit(empty, Format::json)), empty);
}

TEST(Emit, DeterministicWithoutTimestamp)
{
  auto f = fixture("sl2", 4);
  std::string a = emit(hc_table(*f, 1), Format::json);
  std::string b = emit(hc_table(*fixture("sl2", 4), 1), Format::json);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("generated"), std::string::npos);
  ResultTable t = hc_table(*f, 1);
  t.generated = "2020-01-01T00:00:00Z";
  EXPECT_NE(emit(t, Format::json).find("generated"), std::string::npos);
}
