#include <gtest/gtest.h>

#include "hcc/report.hpp"
#include "support.hpp"

using namespace hcc;
using hcc::test::model;
using hcc::test::source_path;

namespace {

bool has(const std::vector<ReportLine> &ls, const std::string &name, const std::string &status)
{
	for (auto &l : ls)
		if (l.name == name && l.status == status)
			return true;
	return false;
}

} // namespace

TEST(Report, FormatAndStatus)
{
	std::vector<ReportLine> ls{{"a.b", "PASS", "x"}, {"c", "SKIP", ""}};
	EXPECT_EQ(format_report(ls), "a.b\tPASS\tx\nc\tSKIP\t\n");
	EXPECT_TRUE(report_ok(ls));
	ls.push_back({"d", "FAIL", "bad"});
	EXPECT_FALSE(report_ok(ls));
	EXPECT_EQ(from_check(Check{"n", false, "why"}).status, "FAIL");
}

TEST(Report, ParseFormat)
{
	EXPECT_EQ(parse_format("text"), Format::Text);
	EXPECT_EQ(parse_format("latex"), Format::Latex);
	EXPECT_EQ(parse_format("expr"), Format::Expr);
	EXPECT_THROW(parse_format("json"), ParseError);
}

TEST(Report, UnknownCategoryIsRejected)
{
	EXPECT_THROW(validate_model(model("diamond"), "everything"), ParseError);
}

TEST(Report, BrokenJacobiIsReported)
{
	Model m = load_model(source_path("models/broken_jacobi.json"));
	auto ls = validate_model(m, "lie");
	EXPECT_TRUE(has(ls, "lie.jacobi", "FAIL"));
	EXPECT_FALSE(report_ok(ls));
}

TEST(Report, EveryCategoryPassesOnDiamond)
{
	for (auto cat : {"lie", "group", "hopf", "trace", "cyclic", "cochain", "bicomplex"}) {
		auto ls = validate_model(model("diamond"), cat, 2);
		EXPECT_FALSE(ls.empty()) << cat;
		EXPECT_TRUE(report_ok(ls)) << cat << "\n" << format_report(ls);
	}
}

TEST(Report, ModelWithoutGroupSkipsGroupChecks)
{
	Model m = load_model(source_path("models/empty_pipeline.json"));
	auto ls = validate_model(m, "trace");
	ASSERT_FALSE(ls.empty());
	EXPECT_EQ(ls.front().status, "SKIP");
}

TEST(Report, CohomologyTextMatchesReferenceBetti)
{
	std::string want = read_golden(source_path("goldens/reference/betti_diamond.txt"));
	std::string rep = cohomology_report(model("diamond"), Format::Expr);
	EXPECT_EQ(rep.substr(0, rep.find('\n')), "betti\t" + want);
}

TEST(Report, RealizeRejectsNonCocycle)
{
	EXPECT_THROW(realize_report(model("diamond"), LieCochain{{{1}, Q(1)}}, "theta_2", Format::Text), Error);
}

TEST(Report, IntegralParserRejectsGarbage)
{
	EXPECT_THROW(parse_integral("int{f0}(", 1), ParseError);
	EXPECT_THROW(parse_integral("int{f0[1,0]}(1)", 1), ParseError);
}
