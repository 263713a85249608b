#include <gtest/gtest.h>

#include "hcc/hopf.hpp"
#include "support.hpp"

using namespace hcc;
using hcc::test::model;

namespace {

using Word = std::vector<int>;
using WordSum = std::map<Word, Q>;

// Naive normal ordering in U(g): rewrite Z_i Z_j -> Z_j Z_i + [Z_i, Z_j] for i > j.
WordSum normal_order(const LieAlgebra &g, WordSum w)
{
	WordSum done;
	while (!w.empty()) {
		auto [word, c] = *w.begin();
		w.erase(w.begin());
		size_t pos = 0;
		while (pos + 1 < word.size() && word[pos] <= word[pos + 1])
			++pos;
		if (pos + 1 >= word.size()) {
			acc(done, word, c);
			continue;
		}
		Word sw = word;
		std::swap(sw[pos], sw[pos + 1]);
		acc(w, sw, c);
		for (size_t k = 0; k < g.dim(); ++k) {
			Q s = g.c(word[pos], word[pos + 1], static_cast<int>(k));
			if (s == 0)
				continue;
			Word br(word.begin(), word.begin() + static_cast<long>(pos));
			br.push_back(static_cast<int>(k));
			br.insert(br.end(), word.begin() + static_cast<long>(pos) + 2, word.end());
			acc(w, br, c * s);
		}
	}
	return done;
}

Word to_word(const Exp &e)
{
	Word w;
	for (size_t i = 0; i < e.size(); ++i)
		for (int k = 0; k < e[i]; ++k)
			w.push_back(static_cast<int>(i));
	return w;
}

UElem to_pbw(const WordSum &s, size_t n)
{
	UElem r;
	for (auto &[w, c] : s) {
		Exp e(n, 0);
		for (int i : w)
			++e[static_cast<size_t>(i)];
		acc(r, e, c);
	}
	return r;
}

} // namespace

class HopfModels : public ::testing::TestWithParam<std::string> {};

TEST_P(HopfModels, AxiomSuitesPass)
{
	Hopf h(model(GetParam()));
	std::vector<Check> all;
	for (auto &v : {check_rep_hopf(h, 2), check_u_hopf(h, 3), check_h_hopf(h, 1, 2), check_matched_hopf(h, 2, 2),
	                check_mpi(h, 2), check_sayd(h, 1, 2)})
		all.insert(all.end(), v.begin(), v.end());
	EXPECT_GE(all.size(), 20u);
	for (auto &c : all)
		EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
}

TEST_P(HopfModels, RepresentativeCoproductIsPullbackOfProduct)
{
	const Model &m = model(GetParam());
	Hopf h(m);
	const GroupModel &g = m.grp();
	auto a = g.labeled2("a"), b = g.labeled2("b");
	Point ab = g.mul_2(a, b);
	for (auto &e : exps_upto(h.d2(), 2)) {
		RFun f{{e, Q(1)}};
		ScalarExpr want = h.rf_expr(f).subst(point_subst(h.coords(), ab));
		ScalarExpr got;
		for (auto &[k, c] : h.rf_coproduct(f))
			got += c * h.rf_expr(RFun{{k.first, Q(1)}}).subst(point_subst(h.coords(), a)) *
			       h.rf_expr(RFun{{k.second, Q(1)}}).subst(point_subst(h.coords(), b));
		EXPECT_EQ(got, want);
		// antipode is composition with the inverse
		EXPECT_EQ(h.rf_expr(h.rf_antipode(f)), h.rf_expr(f).subst(point_subst(h.coords(), g.inv_2(g.vars2()))));
	}
}

TEST_P(HopfModels, EnvelopingProductMatchesNaiveRewriting)
{
	const Model &m = model(GetParam());
	Hopf h(m);
	for (auto &a : exps_upto(h.d1(), 2))
		for (auto &b : exps_upto(h.d1(), 2)) {
			Word w = to_word(a), wb = to_word(b);
			w.insert(w.end(), wb.begin(), wb.end());
			EXPECT_EQ(h.u_mul(a, b), to_pbw(normal_order(m.lie.g1, {{w, 1}}), h.d1()));
		}
}

TEST_P(HopfModels, EnvelopingCoproductIsBinomial)
{
	Hopf h(model(GetParam()));
	for (auto &a : exps_upto(h.d1(), 3)) {
		std::map<std::pair<Exp, Exp>, Q> want;
		for (auto &b : exps_upto(h.d1(), 3)) {
			bool le = true;
			Q c = 1;
			Exp rest(a.size());
			for (size_t i = 0; i < a.size(); ++i) {
				le = le && b[i] <= a[i];
				if (le) {
					c *= binomial(a[i], b[i]);
					rest[i] = a[i] - b[i];
				}
			}
			if (le)
				acc(want, std::pair{b, rest}, c);
		}
		EXPECT_EQ(h.u_coproduct(a), want);
	}
}

TEST_P(HopfModels, EnvelopingAntipodeReversesWords)
{
	const Model &m = model(GetParam());
	Hopf h(m);
	for (auto &a : exps_upto(h.d1(), 3)) {
		Word w = to_word(a);
		std::reverse(w.begin(), w.end());
		Q sign = w.size() % 2 ? -1 : 1;
		EXPECT_EQ(h.u_antipode(a), to_pbw(normal_order(m.lie.g1, {{w, sign}}), h.d1()));
	}
}

INSTANTIATE_TEST_SUITE_P(Builtins, HopfModels,
                         ::testing::Values("diamond", "heisenberg_g1", "heisenberg_r3", "abelian", "shear"));

TEST(Hopf, DiamondModularPair)
{
	Hopf h(model("diamond"));
	// delta = trace of ad on g1 = 0, sigma = det of gamma = 1
	EXPECT_EQ(h.delta(h.gen_z(0)), 0);
	EXPECT_EQ(h.sigma(), h.rf_one());
	EXPECT_EQ(h.s_delta(h.gen_z(0)), h.antipode(h.gen_z(0)));
}

TEST(Hopf, DiamondCopIsFlipOfBowtie)
{
	Hopf h(model("diamond"));
	for (auto &a : hopf_basis(h, 1, 1)) {
		Tensor flip;
		for (auto &[w, c] : h.coproduct_bowtie(a))
			acc(flip, std::vector<HKey>{w[1], w[0]}, c);
		EXPECT_EQ(h.coproduct(a), flip);
	}
}

TEST(Hopf, CorruptedSigmaBreaksMpi)
{
	const Model &m = model("heisenberg_r3");
	Hopf h(m);
	RFun s = h.rf_one();
	acc(s, h.rf_coord(0).begin()->first, Q(1)); // 1 + p1 is not group-like
	h.set_sigma(s, h.rf_one());
	bool any_fail = false;
	for (auto &c : check_mpi(h, 1))
		any_fail = any_fail || !c.ok;
	EXPECT_TRUE(any_fail);
}
