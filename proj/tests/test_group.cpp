#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "hcc/group.hpp"
#include "support.hpp"

using namespace hcc;
using hcc::test::model;

namespace {

Point num_point(std::mt19937 &rng, size_t n)
{
	std::uniform_int_distribution<int> u(-7, 7), d(1, 3);
	Point p;
	for (size_t i = 0; i < n; ++i)
		p.push_back(ScalarExpr(Q(Q(u(rng)) / d(rng))));
	return p;
}

std::vector<double> as_double(const Point &p)
{
	std::vector<double> r;
	for (auto &c : p)
		r.push_back(c.constant().get_d());
	return r;
}

// Heisenberg group as unipotent 3x3 matrices, exponential coordinates of
// [[0,x,z],[0,0,y],[0,0,0]]
Eigen::Matrix3d heis_exp(double x, double y, double z)
{
	Eigen::Matrix3d n = Eigen::Matrix3d::Zero();
	n(0, 1) = x, n(1, 2) = y, n(0, 2) = z;
	return Eigen::Matrix3d::Identity() + n + n * n / 2;
}

std::vector<double> heis_log(const Eigen::Matrix3d &g)
{
	Eigen::Matrix3d n = g - Eigen::Matrix3d::Identity();
	Eigen::Matrix3d l = n - n * n / 2;
	return {l(0, 1), l(1, 2), l(0, 2)};
}

} // namespace

class GroupModels : public ::testing::TestWithParam<std::string> {};

TEST_P(GroupModels, AxiomSuitePasses)
{
	const Model &m = model(GetParam());
	ASSERT_TRUE(m.group.has_value());
	for (auto &c : m.group->check_axioms())
		EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
}

TEST_P(GroupModels, GroupLawsAreAssociativeAtRandomPoints)
{
	const GroupModel &g = model(GetParam()).grp();
	std::mt19937 rng(5);
	for (int i = 0; i < 10; ++i) {
		Point a = num_point(rng, g.d2()), b = num_point(rng, g.d2()), c = num_point(rng, g.d2());
		EXPECT_EQ(g.mul_2(g.mul_2(a, b), c), g.mul_2(a, g.mul_2(b, c)));
		EXPECT_EQ(g.mul_2(a, g.inv_2(a)), g.zero2());
		Point p = num_point(rng, g.d1()), q = num_point(rng, g.d1());
		EXPECT_EQ(g.mul_1(g.mul_1(p, q), p), g.mul_1(p, g.mul_1(q, p)));
	}
}

TEST_P(GroupModels, MaurerCartanFrameIsIdentityAtOrigin)
{
	const GroupModel &g = model(GetParam()).grp();
	auto coords = g.all_coords();
	std::map<Sym, ScalarExpr> origin;
	for (auto &c : coords)
		origin[c] = 0;
	auto fr = g.frame();
	ASSERT_EQ(fr.size(), coords.size());
	for (size_t i = 0; i < fr.size(); ++i)
		EXPECT_EQ(fr[i].subst_coeffs(origin), PolyForm::d(coords[i])) << i;
}

INSTANTIATE_TEST_SUITE_P(Builtins, GroupModels,
                         ::testing::Values("diamond", "heisenberg", "abelian", "shear", "heisenberg_g1",
                                           "heisenberg_r3"));

TEST(Group, HeisenbergLawAgreesWithMatrixProduct)
{
	for (auto name : {"diamond", "heisenberg"}) {
		const GroupModel &g = model(name).grp();
		std::mt19937 rng(6);
		for (int i = 0; i < 20; ++i) {
			Point a = num_point(rng, 3), b = num_point(rng, 3);
			auto da = as_double(a), db = as_double(b);
			auto want = heis_log(heis_exp(da[0], da[1], da[2]) * heis_exp(db[0], db[1], db[2]));
			auto got = as_double(g.mul_2(a, b));
			for (int k = 0; k < 3; ++k)
				EXPECT_NEAR(got[static_cast<size_t>(k)], want[static_cast<size_t>(k)], 1e-12) << name;
		}
	}
}

TEST(Group, BchLawOnGroupOneAgreesWithMatrixProduct)
{
	const GroupModel &g = model("heisenberg_r3").grp();
	std::mt19937 rng(7);
	for (int i = 0; i < 20; ++i) {
		Point a = num_point(rng, 3), b = num_point(rng, 3);
		auto da = as_double(a), db = as_double(b);
		auto want = heis_log(heis_exp(da[0], da[1], da[2]) * heis_exp(db[0], db[1], db[2]));
		auto got = as_double(g.mul_1(a, b));
		for (int k = 0; k < 3; ++k)
			EXPECT_NEAR(got[static_cast<size_t>(k)], want[static_cast<size_t>(k)], 1e-12);
	}
}

TEST(Group, DiamondCoframe)
{
	auto fr = model("diamond").grp().frame2();
	ASSERT_EQ(fr.size(), 3u);
	EXPECT_EQ(fr[0], parse_form("d(x)"));
	EXPECT_EQ(fr[1], parse_form("d(y)"));
	EXPECT_EQ(fr[2], parse_form("1/2*y*d(x) - 1/2*x*d(y) + d(z)"));
}

TEST(Group, DiamondNuMap)
{
	const GroupModel &g = model("diamond").grp();
	Point phi{X("theta")}, psi{X("x"), X("y"), X("z")};
	Point nu = g.nu(phi, psi);
	ASSERT_EQ(nu.size(), 4u);
	EXPECT_EQ(nu[0], X("theta"));
	EXPECT_EQ(nu[1], parse_scalar("-cos(theta)*x - sin(theta)*y"));
	EXPECT_EQ(nu[2], parse_scalar("-cos(theta)*y + sin(theta)*x"));
	EXPECT_EQ(nu[3], parse_scalar("-z"));
}

TEST(Group, DiamondRightActionIsRotationNumerically)
{
	const GroupModel &g = model("diamond").grp();
	std::mt19937 rng(8);
	std::uniform_real_distribution<double> u(-2, 2);
	for (int i = 0; i < 10; ++i) {
		double t = u(rng), x = u(rng), y = u(rng), z = u(rng);
		std::map<Sym, double> pt{{Sym("theta"), t}, {Sym("x"), x}, {Sym("y"), y}, {Sym("z"), z}};
		Point r = g.act_right({X("x"), X("y"), X("z")}, {X("theta")});
		// psi <| phi with psi = (x + iy, z) rotates by e^{-i theta} or e^{i theta}
		double rx = r[0].eval(pt), ry = r[1].eval(pt);
		EXPECT_NEAR(rx * rx + ry * ry, x * x + y * y, 1e-12);
		EXPECT_NEAR(r[2].eval(pt), z, 1e-12);
	}
}

TEST(Group, DiamondGammaIsTrivial)
{
	SMat gm = model("diamond").grp().gamma();
	EXPECT_EQ(gm, smat_identity(1));
	EXPECT_EQ(model("diamond").grp().sigma(), ScalarExpr(1));
}

TEST(Group, SimplexParametrizationHitsVertices)
{
	const GroupModel &g = model("diamond").grp();
	std::mt19937 rng(9);
	std::vector<Point> v{num_point(rng, 3), num_point(rng, 3), num_point(rng, 3)};
	AffineSimplex s = g.build_simplex(v);
	auto par = simplex_parametrization(s);
	for (int k = 0; k < 3; ++k) {
		std::map<Sym, ScalarExpr> at{{simplex_param(1), k == 1 ? 1 : 0}, {simplex_param(2), k == 2 ? 1 : 0}};
		for (size_t c = 0; c < 3; ++c)
			EXPECT_EQ(par.at(s.coords[c]).subst(at), v[static_cast<size_t>(k)][c]);
	}
}
