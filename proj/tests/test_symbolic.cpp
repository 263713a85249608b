#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <gtest/gtest.h>

#include "hcc/form.hpp"
#include "hcc/linalg.hpp"
#include "hcc/simplex.hpp"
#include "support.hpp"

using namespace hcc;
using hcc::test::random_point;
using hcc::test::random_poly;

namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// nested Gauss-Legendre on the collapsed cube; exact for the degrees used here
double simplex_quadrature(const std::function<double(const std::vector<double> &)> &f, int p)
{
	using G = boost::math::quadrature::gauss<double, 20>;
	std::function<double(std::vector<double>, double, int)> rec = [&](std::vector<double> t, double rest, int k) {
		if (k == p)
			return f(t);
		return G::integrate(
		    [&](double s) {
			    auto t2 = t;
			    t2.push_back(s);
			    return rec(t2, rest - s, k + 1);
		    },
		    0.0, rest);
	};
	return rec({}, 1.0, 0);
}

} // namespace

TEST(Scalar, ParseRoundTrip)
{
	std::mt19937 rng(11);
	for (int i = 0; i < 60; ++i) {
		ScalarExpr p = random_poly(rng, {"x", "y", "z_0"}, 5, 3);
		EXPECT_EQ(parse_scalar(p.expr()), p) << p.expr();
	}
}

TEST(Scalar, EvaluationIsARingHomomorphism)
{
	std::mt19937 rng(12);
	std::vector<std::string> v{"x", "y", "w"};
	for (int i = 0; i < 40; ++i) {
		ScalarExpr a = random_poly(rng, v, 4, 3), b = random_poly(rng, v, 4, 2);
		auto pt = random_point(rng, v);
		EXPECT_LT(rel_err((a * b).eval(pt), a.eval(pt) * b.eval(pt)), 1e-12);
		EXPECT_LT(rel_err((a - b).eval(pt), a.eval(pt) - b.eval(pt)), 1e-12);
		EXPECT_LT(rel_err(a.pow(3).eval(pt), std::pow(a.eval(pt), 3)), 1e-10);
	}
}

TEST(Scalar, DerivativeMatchesFiniteDifference)
{
	std::mt19937 rng(13);
	std::vector<std::string> v{"x", "y"};
	const double h = 1e-5;
	for (int i = 0; i < 30; ++i) {
		ScalarExpr a = random_poly(rng, v, 4, 3) + ScalarExpr::sin(Sym("x")) * X("y");
		auto pt = random_point(rng, v);
		auto lo = pt, hi = pt;
		lo[Sym("x")] -= h;
		hi[Sym("x")] += h;
		double fd = (a.eval(hi) - a.eval(lo)) / (2 * h);
		EXPECT_LT(rel_err(a.diff(Sym("x")).eval(pt), fd), 1e-6) << a.text();
	}
}

TEST(Scalar, SubstitutionCommutesWithEvaluation)
{
	std::mt19937 rng(14);
	for (int i = 0; i < 30; ++i) {
		ScalarExpr p = random_poly(rng, {"x", "y"}, 4, 3);
		ScalarExpr q = random_poly(rng, {"y", "w"}, 3, 2);
		auto pt = random_point(rng, {"y", "w"});
		auto inner = pt;
		inner[Sym("x")] = q.eval(pt);
		EXPECT_LT(rel_err(p.subst(Sym("x"), q).eval(pt), p.eval(inner)), 1e-10);
	}
}

TEST(Scalar, PythagoreanIdentityCanonicalizes)
{
	EXPECT_EQ(parse_scalar("cos(theta)^2 + sin(theta)^2"), ScalarExpr(1));
	EXPECT_EQ(parse_scalar("sin(theta)^2*x - sin(theta)*cos(theta)*y + cos(theta)*sin(theta)*y + cos(theta)^2*x"),
	          X("x"));
}

TEST(Scalar, TrigOfLinearArgument)
{
	auto [s, c] = trig_of_linear(ScalarExpr(2) * X("t") - X("u"));
	std::map<Sym, double> pt{{Sym("t"), 0.3}, {Sym("u"), -1.1}};
	EXPECT_NEAR(s.eval(pt), std::sin(0.6 + 1.1), 1e-13);
	EXPECT_NEAR(c.eval(pt), std::cos(0.6 + 1.1), 1e-13);
}

TEST(Scalar, RationalsPrintCanonically)
{
	EXPECT_EQ(ScalarExpr(Q(2) / 4).expr(), "1/2");
	EXPECT_EQ(parse_scalar("6/4*x").expr(), "3/2*x");
	EXPECT_THROW(parse_scalar("1 +"), Error);
	EXPECT_THROW(parse_scalar("x^-1"), Error);
}

TEST(Form, WedgeIsGradedCommutative)
{
	std::mt19937 rng(21);
	for (int i = 0; i < 20; ++i) {
		PolyForm a = PolyForm::d("x") * random_poly(rng, {"x", "y"}, 2, 2) + PolyForm::d("y") * X("z");
		PolyForm b = PolyForm::d("z") * random_poly(rng, {"y", "z"}, 2, 2) + PolyForm::d("x");
		PolyForm c = (PolyForm::d("y") ^ PolyForm::d("z")) * random_poly(rng, {"x"}, 2, 2);
		EXPECT_EQ(a ^ b, -(b ^ a));
		EXPECT_EQ(a ^ c, c ^ a);
		EXPECT_TRUE((a ^ a).is_zero());
	}
}

TEST(Form, ExteriorDerivativeSquaresToZeroAndIsLeibniz)
{
	std::mt19937 rng(22);
	std::vector<Sym> co{Sym("x"), Sym("y"), Sym("z")};
	for (int i = 0; i < 20; ++i) {
		PolyForm f = random_poly(rng, {"x", "y", "z"}, 4, 3);
		PolyForm a = PolyForm::d("x") * random_poly(rng, {"y", "z"}, 3, 2) +
		             PolyForm::d("z") * (ScalarExpr::cos(Sym("x")) * X("y"));
		EXPECT_TRUE(f.d(co).d(co).is_zero());
		EXPECT_TRUE(a.d(co).d(co).is_zero());
		EXPECT_EQ((f ^ a).d(co), (f.d(co) ^ a) + (f ^ a.d(co)));
		EXPECT_EQ((a ^ a.d(co)).d(co), (a.d(co) ^ a.d(co)) - (a ^ a.d(co).d(co)));
	}
}

TEST(Form, PullbackCommutesWithD)
{
	std::vector<Sym> src{Sym("x"), Sym("y")}, dst{Sym("u"), Sym("v")};
	std::map<Sym, ScalarExpr> F{{Sym("u"), X("x") * X("y")}, {Sym("v"), X("x") + X("y").pow(2)}};
	std::mt19937 rng(23);
	for (int i = 0; i < 15; ++i) {
		PolyForm a = PolyForm::d("u") * random_poly(rng, {"u", "v"}, 3, 2) + PolyForm::d("v") * X("u");
		EXPECT_EQ(a.pullback(F, src).d(src), a.d(dst).pullback(F, src));
	}
}

TEST(Form, ParseAndPrintAgree)
{
	PolyForm f = parse_form("d(x)*d(y)*d(z) + x*d(theta)*d(x)*d(z) + y*d(theta)*d(y)*d(z)");
	EXPECT_EQ(parse_form(f.expr()), f);
	EXPECT_EQ(f.degree(), 3);
	EXPECT_EQ(parse_form("d(y)*d(x)"), -(PolyForm::d("x") ^ PolyForm::d("y")));
	EXPECT_EQ(parse_form("theta_2*theta_1").terms().size(), 1u);
}

TEST(Simplex, DirichletAgainstQuadrature)
{
	for (int p = 1; p <= 3; ++p)
		for (int a = 0; a <= 3; ++a)
			for (int b = 0; b <= 2; ++b) {
				std::vector<int> e(static_cast<size_t>(p), 0);
				e[0] = a;
				e[static_cast<size_t>(p - 1)] += b;
				double num = simplex_quadrature(
				    [&](const std::vector<double> &t) {
					    double r = 1;
					    for (size_t i = 0; i < t.size(); ++i)
						    r *= std::pow(t[i], e[i]);
					    return r;
				    },
				    p);
				EXPECT_LT(rel_err(dirichlet(e).get_d(), num), 1e-12) << p << " " << a << " " << b;
			}
}

TEST(Simplex, PolynomialIntegralAgainstQuadrature)
{
	std::mt19937 rng(31);
	std::vector<Sym> t{simplex_param(1), simplex_param(2)};
	for (int i = 0; i < 10; ++i) {
		ScalarExpr q = random_poly(rng, {t[0].name(), t[1].name()}, 5, 4);
		double num = simplex_quadrature(
		    [&](const std::vector<double> &s) { return q.eval({{t[0], s[0]}, {t[1], s[1]}}); }, 2);
		EXPECT_LT(rel_err(integrate_standard(q, t).constant().get_d(), num), 1e-11);
	}
}

TEST(Simplex, VolumeFormGivesSignedVolume)
{
	std::mt19937 rng(32);
	std::uniform_int_distribution<int> u(-6, 6);
	std::vector<Sym> co{Sym("x"), Sym("y"), Sym("z")};
	PolyForm vol = PolyForm::d("x") ^ PolyForm::d("y") ^ PolyForm::d("z");
	for (int i = 0; i < 20; ++i) {
		AffineSimplex s{co, {}};
		Eigen::Matrix3d m;
		std::vector<std::vector<int>> v(4, std::vector<int>(3));
		for (auto &row : v)
			for (auto &x : row)
				x = u(rng);
		for (auto &row : v)
			s.vertices.push_back({row[0], row[1], row[2]});
		for (int r = 0; r < 3; ++r)
			for (int c = 0; c < 3; ++c)
				m(c, r) = v[static_cast<size_t>(r + 1)][static_cast<size_t>(c)] - v[0][static_cast<size_t>(c)];
		EXPECT_NEAR(integrate_over_simplex(vol, s).constant().get_d(), m.determinant() / 6, 1e-12);
		std::swap(s.vertices[1], s.vertices[2]);
		EXPECT_NEAR(integrate_over_simplex(vol, s).constant().get_d(), -m.determinant() / 6, 1e-12);
	}
}

TEST(Linalg, RankMatchesFloatingPivot)
{
	std::mt19937 rng(41);
	std::uniform_int_distribution<int> u(-3, 3);
	for (int i = 0; i < 30; ++i) {
		size_t rows = 2 + static_cast<size_t>(i % 5), cols = 3 + static_cast<size_t>(i % 4);
		QMat m(rows, QVec(cols));
		Eigen::MatrixXd e(rows, cols);
		for (size_t r = 0; r < rows; ++r)
			for (size_t c = 0; c < cols; ++c) {
				int x = (r == rows - 1 && rows > 2) ? 0 : u(rng);
				m[r][c] = x;
				e(static_cast<long>(r), static_cast<long>(c)) = x;
			}
		if (rows > 2) // force a dependent row
			for (size_t c = 0; c < cols; ++c) {
				m[rows - 1][c] = m[0][c] - 2 * m[1][c];
				e(static_cast<long>(rows - 1), static_cast<long>(c)) = m[rows - 1][c].get_d();
			}
		Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
		EXPECT_EQ(rank(m, cols), static_cast<int>(lu.rank()));
		auto ker = kernel(m, cols);
		EXPECT_EQ(ker.size(), cols - static_cast<size_t>(rank(m, cols)));
		for (auto &v : ker)
			for (size_t r = 0; r < rows; ++r) {
				Q s = 0;
				for (size_t c = 0; c < cols; ++c)
					s += m[r][c] * v[c];
				EXPECT_EQ(s, 0);
			}
	}
}

TEST(Linalg, SymbolicInverse)
{
	SMat a{{1, X("x"), X("y")}, {0, 1, X("z")}, {0, 0, 1}};
	SMat i = smat_inverse_const_det(a);
	EXPECT_EQ(smat_mul(a, i), smat_identity(3));
	EXPECT_EQ(smat_det(a), ScalarExpr(1));
}
