#include <gtest/gtest.h>

#include "hcc/phi.hpp"
#include "hcc/report.hpp"
#include "support.hpp"

using namespace hcc;
using hcc::test::model;

namespace {

struct Fixture {
	const Model &m = model("diamond");
	CochainMaps cm{m};
	PhiMap pm{cm};
	Hopf h{m};
	Conv cv{m};
};

GCochain part(const CochainMaps &cm, const std::string &cls, int p, int q)
{
	return cm.E(select_class(cm.model(), cls), p, q);
}

} // namespace

TEST(Phi, DegreeZeroClassIsTheTraceFunctional)
{
	Fixture f;
	DCochain d = f.cm.Theta(part(f.cm, "1", 0, 0));
	ASSERT_EQ(f.pm.target_degree(d), 1);
	Integral v = f.pm.phi(d, f.pm.probes(1, true));
	EXPECT_EQ(v, parse_integral("int{f0,f1[1]}(1)", 1));
}

TEST(Phi, FundamentalClassOfG1IsIntegration)
{
	Fixture f;
	DCochain d = f.cm.Theta(part(f.cm, "theta_1", 0, 1));
	ASSERT_EQ(f.pm.target_degree(d), 0);
	EXPECT_EQ(f.pm.phi(d, f.pm.probes(0, true)), parse_integral("int{f0}(1)", 1));
}

TEST(Phi, ParityBookkeeping)
{
	// dim G1 = 1: classes 1 and theta_1234 odd, theta_1 and theta_234 even
	EXPECT_EQ(hp_parity(0, 1), 1);
	EXPECT_EQ(hp_parity(1, 1), 0);
	EXPECT_EQ(hp_parity(3, 1), 0);
	EXPECT_EQ(hp_parity(4, 1), 1);
	Fixture f;
	for (auto &cls : f.m.classes) {
		LieCochain w = select_class(f.m, cls);
		int deg = static_cast<int>(w.begin()->first.size());
		for (auto &e : f.cm.E_all(w)) {
			int l = f.pm.target_degree(f.cm.Theta(e));
			EXPECT_EQ(l % 2, hp_parity(deg, 1)) << cls;
		}
	}
}

TEST(Phi, ImageIsInTheRangeOfTheCharacteristicMap)
{
	Fixture f;
	for (auto &cls : {"theta_2*theta_3*theta_4", "theta_1*theta_2*theta_3*theta_4", "1"})
		for (auto &e : f.cm.E_all(select_class(f.m, cls))) {
			DCochain d = f.cm.Theta(e);
			int l = f.pm.target_degree(d);
			auto probes = f.pm.probes(l, true);
			Fn integrand = f.pm.phi_integrand(d, probes);
			Tensor w = representative_word(f.pm, integrand, l);
			EXPECT_FALSE(w.empty()) << cls;
			EXPECT_EQ(characteristic_map(f.h, f.cv, w, probes), f.pm.phi(d, probes))
			    << cls << " (" << e.p << "," << e.q << ")";
		}
}

TEST(Phi, VanishesOffTheSupportCondition)
{
	Fixture f;
	DCochain d = f.cm.Theta(part(f.cm, "theta_2*theta_3*theta_4", 2, 1));
	std::vector<ConvTerms> a;
	for (int i = 0; i < 3; ++i) {
		Point p = f.cm.group().zero2();
		p[2] = ScalarExpr(i + 1);
		a.push_back({{p, Fn::formal(Sym("f" + std::to_string(i)), 1)}});
	}
	EXPECT_TRUE(f.pm.phi(d, a).is_zero());
}

TEST(Phi, MixedPartIsFreeOfTheCentralCoordinate)
{
	Fixture f;
	DCochain d = f.cm.Theta(part(f.cm, "theta_2*theta_3*theta_4", 2, 1));
	Integral v = f.pm.phi(d, f.pm.probes(2, true));
	ASSERT_EQ(v.terms().size(), 1u);
	auto &[k, c] = *v.terms().begin();
	EXPECT_EQ(k.size(), 3u);
	for (int i = 0; i <= 2; ++i)
		EXPECT_FALSE(c.depends_on(vertex_sym(Sym("z"), i)));
	// the displayed closed form keeps z after psi_0 is eliminated
	Integral ref = parse_integral(read_golden(hcc::test::source_path("goldens/reference/phi_c2_t234.expr")), 1)
	                   .subst(f.pm.support_subst(2));
	EXPECT_NE(ref, v);
}

TEST(Phi, IntegralExprRoundTrip)
{
	Fixture f;
	for (auto &e : f.cm.E_all(select_class(f.m, "theta_2*theta_3*theta_4"))) {
		DCochain d = f.cm.Theta(e);
		Integral v = f.pm.phi(d, f.pm.probes(f.pm.target_degree(d), true));
		EXPECT_EQ(parse_integral(v.expr(), 1), v);
	}
}
