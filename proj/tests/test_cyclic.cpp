#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "hcc/cyclic.hpp"
#include "support.hpp"

using namespace hcc;
using hcc::test::model;

namespace {

bool all_ok(const std::vector<Check> &cs, std::string *why = nullptr)
{
	for (auto &c : cs)
		if (!c.ok) {
			if (why)
				*why = c.name + ": " + c.detail;
			return false;
		}
	return true;
}

const Check &find(const std::vector<Check> &cs, const std::string &name)
{
	for (auto &c : cs)
		if (c.name == name)
			return c;
	throw std::runtime_error("no check " + name);
}

} // namespace

class CyclicModels : public ::testing::TestWithParam<std::string> {};

TEST_P(CyclicModels, LambdaModuleIdentities)
{
	Hopf h(model(GetParam()));
	CyclicModule c(h);
	auto cs = check_cyclic(c, 3, 4);
	EXPECT_GE(cs.size(), 9u);
	std::string why;
	EXPECT_TRUE(all_ok(cs, &why)) << why;
}

TEST_P(CyclicModels, CyclicOperatorHasOrderNPlusOne)
{
	Hopf h(model(GetParam()));
	CyclicModule c(h);
	for (int n = 1; n <= 3; ++n)
		for (auto &w : sample_words(h, n, 3, 100u + static_cast<unsigned>(n), 1, 1))
			EXPECT_EQ(c.tau_pow(w, n + 1), w) << "n = " << n;
}

TEST_P(CyclicModels, HochschildAndConnesDifferentials)
{
	Hopf h(model(GetParam()));
	CyclicModule c(h);
	for (int n = 1; n <= 2; ++n)
		for (auto &w : sample_words(h, n, 3, 200u + static_cast<unsigned>(n), 1, 1)) {
			EXPECT_TRUE(c.b(c.b(w)).empty());
			EXPECT_TRUE(c.B(c.B(w)).empty());
			EXPECT_TRUE(tensor_add(c.b(c.B(w)), c.B(c.b(w))).empty());
		}
}

INSTANTIATE_TEST_SUITE_P(Builtins, CyclicModels, ::testing::Values("diamond", "heisenberg_r3", "abelian", "shear"));

TEST(Cyclic, DiamondTauOnGenerator)
{
	Hopf h(model("diamond"));
	CyclicModule c(h);
	Tensor w = h.tensor1(h.gen_z(0));
	EXPECT_EQ(c.tau(w), scaled(w, Q(-1)));
	EXPECT_EQ(c.tau_pow(w, 2), w);
}

TEST(Cyclic, ConnesOperatorVanishesBelowDegreeOne)
{
	Hopf h(model("diamond"));
	CyclicModule c(h);
	Tensor unit{{{}, Q(3)}};
	EXPECT_TRUE(c.B(unit).empty());
}

TEST(Trace, IdentitiesHoldOnHermiteCases)
{
	for (auto name : {"diamond", "heisenberg_r3", "abelian"}) {
		const Model &m = model(name);
		Hopf h(m);
		Conv cv(m);
		auto cs = check_trace_identities(h, cv, 60);
		ASSERT_EQ(cs.size(), 3u);
		for (auto &c : cs) {
			EXPECT_TRUE(c.ok) << name << " " << c.name << ": " << c.detail;
			EXPECT_EQ(c.detail, "60 cases");
		}
	}
}

TEST(Trace, CorruptedCharacterIsDetected)
{
	const Model &m = model("diamond");
	Hopf h(m);
	Conv cv(m);
	h.set_delta(QVec{Q(1)});
	auto cs = check_trace_identities(h, cv, 60);
	EXPECT_FALSE(find(cs, "trace.delta_invariance").ok);
	EXPECT_FALSE(find(cs, "trace.integration_by_parts").ok);
}

TEST(Trace, CorruptedGroupLikeIsDetected)
{
	const Model &m = model("diamond");
	Hopf h(m);
	Conv cv(m);
	RFun s{{Exp{1, 0, 0}, Q(1)}, {Exp{0, 0, 0}, Q(1)}};
	h.set_sigma(s, s);
	EXPECT_FALSE(find(check_trace_identities(h, cv, 60), "trace.sigma_trace").ok);
}

TEST(Trace, GaussianMomentsAgainstQuadrature)
{
	using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
	for (int n = 0; n <= 6; ++n)
		for (long mfreq = 0; mfreq <= 2; ++mfreq)
			for (Q k : {Q(1), Q(1, 2), Q(2)}) {
				double kd = k.get_d();
				auto re = [&](double t) { return std::pow(t, n) * std::cos(mfreq * t) * std::exp(-kd * t * t); };
				auto im = [&](double t) { return std::pow(t, n) * std::sin(mfreq * t) * std::exp(-kd * t * t); };
				double wr = GK::integrate(re, -14.0, 14.0, 12, 1e-14);
				double wi = GK::integrate(im, -14.0, 14.0, 12, 1e-14);
				auto [r, i] = gauss_moment(n, mfreq, k);
				EXPECT_NEAR(r.eval({}), wr, 1e-10) << n << " " << mfreq << " " << k;
				EXPECT_NEAR(i.eval({}), wi, 1e-10) << n << " " << mfreq << " " << k;
			}
}

TEST(Trace, CharacteristicMapIntertwinesRotation)
{
	const Model &m = model("diamond");
	Hopf h(m);
	Conv cv(m);
	CyclicModule c(h);
	Point e = m.grp().zero2();
	ConvTerms a0 = cv.elem(Fn::formal(Sym("f0"), 1), e), a1 = cv.elem(Fn::formal(Sym("f1"), 1), e);
	for (auto &gen : hopf_basis(h, 1, 1)) {
		Tensor w = h.tensor1(gen);
		if (w.empty())
			continue;
		EXPECT_EQ(characteristic_map(h, cv, c.tau(w), {a0, a1}), characteristic_map(h, cv, w, {a1, a0}))
		    << h.text(gen);
	}
}
