#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "hcc/lie.hpp"
#include "support.hpp"

using namespace hcc;
using hcc::test::model;

namespace {

// d on the subset basis from the invariant formula
// (dw)(e_0..e_k) = sum_{a<b} (-1)^{a+b} w([e_a,e_b], e_0..^a..^b..e_k);
// written against the structure constants only, no library differential.
Eigen::MatrixXd brute_d(const LieAlgebra &g, int k)
{
	int n = static_cast<int>(g.dim());
	auto src = subsets(n, k), dst = subsets(n, k + 1);
	Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<long>(dst.size()), static_cast<long>(src.size()));
	for (size_t r = 0; r < dst.size(); ++r) {
		auto &S = dst[r];
		for (size_t a = 0; a < S.size(); ++a)
			for (size_t b = a + 1; b < S.size(); ++b)
				for (int l = 0; l < n; ++l) {
					double c = g.c(S[a], S[b], l).get_d();
					if (c == 0)
						continue;
					std::vector<int> rest{l};
					for (size_t i = 0; i < S.size(); ++i)
						if (i != a && i != b)
							rest.push_back(S[i]);
					// sort with sign
					int sign = ((a + b) % 2) ? -1 : 1;
					for (size_t i = 0; i < rest.size(); ++i)
						for (size_t j = i + 1; j < rest.size(); ++j)
							if (rest[i] > rest[j])
								sign = -sign;
					std::sort(rest.begin(), rest.end());
					if (std::adjacent_find(rest.begin(), rest.end()) != rest.end())
						continue;
					long col = std::find(src.begin(), src.end(), rest) - src.begin();
					m(static_cast<long>(r), col) += sign * c;
				}
	}
	return m;
}

std::vector<int> brute_betti(const LieAlgebra &g)
{
	int n = static_cast<int>(g.dim());
	std::vector<int> rk(static_cast<size_t>(n) + 2, 0);
	for (int k = 0; k < n; ++k) {
		Eigen::FullPivLU<Eigen::MatrixXd> lu(brute_d(g, k));
		rk[static_cast<size_t>(k) + 1] = static_cast<int>(lu.rank());
	}
	std::vector<int> b;
	for (int k = 0; k <= n; ++k)
		b.push_back(static_cast<int>(subsets(n, k).size()) - rk[static_cast<size_t>(k) + 1] - rk[static_cast<size_t>(k)]);
	return b;
}

Eigen::VectorXd as_vec(const LieCochain &w, int n, int k)
{
	auto basis = subsets(n, k);
	Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<long>(basis.size()));
	for (auto &[I, c] : w)
		v(std::find(basis.begin(), basis.end(), I) - basis.begin()) = c.get_d();
	return v;
}

} // namespace

class AllModels : public ::testing::TestWithParam<std::string> {};

TEST_P(AllModels, CeDifferentialSquaresToZero)
{
	LieAlgebra g = model(GetParam()).algebra();
	int n = static_cast<int>(g.dim());
	for (int k = 0; k + 2 <= n; ++k)
		for (auto &I : subsets(n, k))
			EXPECT_TRUE(ce_d(g, ce_d(g, lc_basis(I))).empty());
}

TEST_P(AllModels, BettiMatchesBruteForceRank)
{
	LieAlgebra g = model(GetParam()).algebra();
	EXPECT_EQ(ce_cohomology(g).betti, brute_betti(g));
}

TEST_P(AllModels, RepresentativesAreClosedAndIndependentModExact)
{
	LieAlgebra g = model(GetParam()).algebra();
	int n = static_cast<int>(g.dim());
	Cohomology h = ce_cohomology(g);
	for (int k = 0; k <= n; ++k) {
		auto &reps = h.reps[static_cast<size_t>(k)];
		ASSERT_EQ(static_cast<int>(reps.size()), h.betti[static_cast<size_t>(k)]);
		long rows = static_cast<long>(subsets(n, k).size());
		Eigen::MatrixXd im = k > 0 ? brute_d(g, k - 1) : Eigen::MatrixXd::Zero(rows, 0);
		Eigen::MatrixXd all(rows, im.cols() + static_cast<long>(reps.size()));
		all.leftCols(im.cols()) = im;
		for (size_t i = 0; i < reps.size(); ++i) {
			EXPECT_TRUE(ce_d(g, reps[i]).empty());
			all.col(im.cols() + static_cast<long>(i)) = as_vec(reps[i], n, k);
		}
		if (all.cols() == 0)
			continue;
		long base = im.cols() ? Eigen::FullPivLU<Eigen::MatrixXd>(im).rank() : 0;
		EXPECT_EQ(Eigen::FullPivLU<Eigen::MatrixXd>(all).rank() - base, static_cast<long>(reps.size())) << "degree " << k;
	}
}

TEST_P(AllModels, JacobiHoldsBruteForce)
{
	LieAlgebra g = model(GetParam()).algebra();
	int n = static_cast<int>(g.dim());
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k) {
				QVec s = g.bracket(g.unit(i), g.bracket(g.unit(j), g.unit(k)));
				QVec t = g.bracket(g.unit(j), g.bracket(g.unit(k), g.unit(i)));
				QVec u = g.bracket(g.unit(k), g.bracket(g.unit(i), g.unit(j)));
				for (int l = 0; l < n; ++l)
					EXPECT_EQ(s[static_cast<size_t>(l)] + t[static_cast<size_t>(l)] + u[static_cast<size_t>(l)], 0);
			}
	EXPECT_TRUE(model(GetParam()).lie.validate().empty());
}

TEST_P(AllModels, NaturalSplitRoundTrip)
{
	const Model &m = model(GetParam());
	LieAlgebra g = m.algebra();
	int n = static_cast<int>(g.dim());
	for (int k = 0; k <= n; ++k)
		for (auto &I : subsets(n, k)) {
			LieCochain w = lc_basis(I);
			EXPECT_EQ(natural_join(natural_split(w, static_cast<int>(m.d1())), static_cast<int>(m.d1())), w);
		}
}

INSTANTIATE_TEST_SUITE_P(Builtins, AllModels,
                         ::testing::Values("diamond", "heisenberg", "abelian", "shear", "nonunimodular",
                                           "heisenberg_g1", "heisenberg_r3"));

TEST(Cohomology, DiamondBettiAndGenerators)
{
	Cohomology h = ce_cohomology(model("diamond").algebra());
	EXPECT_EQ(h.betti, (std::vector<int>{1, 1, 0, 1, 1}));
	// generators theta_1 and theta_2 theta_3 theta_4 (0-based 0 and 1,2,3)
	ASSERT_EQ(h.reps[1].size(), 1u);
	ASSERT_EQ(h.reps[1][0].size(), 1u);
	EXPECT_EQ(h.reps[1][0].begin()->first, (std::vector<int>{0}));
	ASSERT_EQ(h.reps[3][0].size(), 1u);
	EXPECT_EQ(h.reps[3][0].begin()->first, (std::vector<int>{1, 2, 3}));
}

TEST(Cohomology, SmallExamples)
{
	EXPECT_EQ(ce_cohomology(model("abelian").algebra()).betti, (std::vector<int>{1, 2, 1}));
	EXPECT_EQ(ce_cohomology(model("heisenberg").algebra()).betti, (std::vector<int>{1, 2, 2, 1}));
}

TEST(Cohomology, DeltaCharacterIsTraceOfAd)
{
	LieAlgebra g = model("nonunimodular").algebra();
	QVec d = delta_character(g);
	for (size_t i = 0; i < g.dim(); ++i) {
		Q tr = 0;
		QMat a = g.ad(static_cast<int>(i));
		for (size_t j = 0; j < g.dim(); ++j)
			tr += a[j][j];
		EXPECT_EQ(d[i], tr);
	}
	EXPECT_NE(d[0], 0);
}

TEST(MatchedPair, BrokenJacobiIsReportedWithTriple)
{
	Model m = load_model(hcc::test::source_path("models/broken_jacobi.json"));
	auto v = m.lie.g2.check();
	ASSERT_FALSE(v.empty());
	EXPECT_EQ(v[0].rfind("lie.jacobi ", 0), 0u) << v[0];
}

TEST(MatchedPair, CorruptedActionViolatesCompatibility)
{
	Model m = builtin_model("diamond");
	// X <| T = X makes <| T fail the derivation rule on [X, Y] = Z
	m.lie.right[0][0] = QVec{1, 0, 0};
	EXPECT_FALSE(m.lie.validate().empty());
}

TEST(MatchedPair, BicrossedBracketRestrictsToFactors)
{
	const Model &m = model("diamond");
	LieAlgebra g = m.algebra();
	ASSERT_EQ(g.dim(), 4u);
	// [X, Y] = Z inside g2
	EXPECT_EQ(g.bracket(g.unit(1), g.unit(2)), g.unit(3));
}
