#include <gtest/gtest.h>

#include "hcc/bicomplex.hpp"
#include "hcc/report.hpp"
#include "support.hpp"

using namespace hcc;
using hcc::test::model;

namespace {

void expect_all(const std::vector<Check> &cs, const std::string &ctx)
{
	EXPECT_FALSE(cs.empty()) << ctx;
	for (auto &c : cs)
		EXPECT_TRUE(c.ok) << ctx << " " << c.name << ": " << c.detail;
}

const Check &find(const std::vector<Check> &cs, const std::string &name)
{
	for (auto &c : cs)
		if (c.name == name)
			return c;
	throw std::runtime_error("no check " + name);
}

} // namespace

class BicomplexModels : public ::testing::TestWithParam<std::string> {};

TEST_P(BicomplexModels, StepOneAndTwo)
{
	Hopf h(model(GetParam()));
	Bicomplex bc(h);
	expect_all(check_step1(bc, 2, 4), GetParam());
	expect_all(check_step2(bc, 2, 4), GetParam());
}

TEST_P(BicomplexModels, StepThreeAndCrossModule)
{
	const Model &m = model(GetParam());
	Hopf h(m);
	Bicomplex bc(h);
	expect_all(check_step3(bc, 2, 3), GetParam());
	CochainMaps cm(m);
	for (auto &s : m.classes)
		expect_all(check_cross_module(bc, cm, select_class(m, s), s), GetParam() + " " + s);
}

TEST_P(BicomplexModels, PoincareAndAppendixMaps)
{
	Hopf h(model(GetParam()));
	Bicomplex bc(h);
	expect_all(check_poincare(bc), GetParam());
	expect_all(check_psi_bowtie(bc, 2), GetParam());
	expect_all(check_aw_sh(bc, 3, 2), GetParam());
}

INSTANTIATE_TEST_SUITE_P(Builtins, BicomplexModels,
                         ::testing::Values("diamond", "shear", "heisenberg_g1", "heisenberg_r3"));

TEST(Bicomplex, WrongCoboundarySignIsDetected)
{
	Hopf h(model("heisenberg_r3"));
	Bicomplex bc(h);
	bc.set_dg_sign(-1);
	EXPECT_FALSE(find(check_step2(bc, 2, 4), "bicomplex.step2.dg_squared").ok);
}

TEST(Bicomplex, IsomorphismIRoundTripOnSamples)
{
	Hopf h(model("heisenberg_r3"));
	Bicomplex bc(h);
	for (int p = 0; p <= 2; ++p)
		for (auto &w : sample_rwords(h, p, 5, 900u + static_cast<unsigned>(p))) {
			RWord iw = bc.I(w);
			EXPECT_EQ(rword_length(iw), p + 1);
			EXPECT_TRUE(bc.coinvariant(iw));
			EXPECT_EQ(bc.I_inv(iw), w);
		}
}

TEST(Bicomplex, DiamondVolumeAndPoincare)
{
	Hopf h(model("diamond"));
	Bicomplex bc(h);
	// dim g1 = 1: iota(1) varpi = theta_1, iota(Z_1) varpi = 1
	EXPECT_EQ(bc.volume(), (LieCochain{{{0}, Q(1)}}));
	EXPECT_EQ(bc.poincare({}), bc.volume());
	EXPECT_EQ(bc.poincare({0}), (LieCochain{{{}, Q(1)}}));
}

TEST(Bicomplex, BowtieMapInvertsOnSingleLetters)
{
	Hopf h(model("diamond"));
	Bicomplex bc(h);
	for (auto &a : hopf_basis(h, 2, 2)) {
		Tensor w = h.tensor1(a);
		if (w.empty())
			continue;
		EXPECT_EQ(bc.psi_bowtie_inv(bc.psi_bowtie(w)), w) << h.text(a);
	}
}
