#pragma once

#include <map>
#include <vector>

#include "hcc/cochain.hpp"
#include "hcc/conv.hpp"
#include "hcc/cyclic.hpp"

namespace hcc {

// Forms on G1 with test-function coefficients, keyed by differential generators.
using FForm = std::map<std::vector<Sym>, Fn>;

struct CKey {
	std::vector<Point> deltas; // sorted, pairwise distinct, none equal to e
	Point U;
	auto operator<=>(const CKey &) const = default;
};

// Element of C = (A*(G1) (x) Lambda*(C G2')) x| G2, sum of w delta_{g_1}...delta_{g_k} U*_g.
using CElem = std::map<CKey, FForm>;

class PhiMap {
  public:
	explicit PhiMap(const CochainMaps &cm);
	const CochainMaps &cochains() const { return cm_; }
	const std::vector<Sym> &coords() const { return c1_; }

	CElem from_conv(const ConvTerms &a) const;
	// d(f U*_psi) = df U*_psi - f delta_psi U*_psi
	CElem d(const ConvTerms &a) const;
	CElem mul(const CElem &a, const CElem &b) const;

	// Integrand of gamma~ over G1 (before integration). Terms of the wrong
	// bidegree are ignored unless strict, where they are an error.
	Fn gamma_tilde_integrand(const DCochain &g, const CElem &c, bool strict = false) const;
	Integral gamma_tilde(const DCochain &g, const CElem &c, bool strict = false) const;

	// Phi(g)(a^0, ..., a^l), l = p + dim G1 - q.
	Fn phi_integrand(const DCochain &g, const std::vector<ConvTerms> &a) const;
	Integral phi(const DCochain &g, const std::vector<ConvTerms> &a) const;

	int target_degree(const DCochain &g) const { return g.p + static_cast<int>(c1_.size()) - g.q; }

	// a^i = f_i U*_{psi_i}. With support, psi_0 = (psi_l ... psi_1)^{-1} so
	// that the product of the group labels is e.
	std::vector<ConvTerms> probes(int l, bool support) const;
	// substitution psi_0 -> (psi_l ... psi_1)^{-1} on vertex coordinates
	std::map<Sym, ScalarExpr> support_subst(int l) const;

  private:
	const CochainMaps &cm_;
	const GroupModel &g_;
	std::vector<Sym> c1_;

	FForm wedge(const FForm &a, const FForm &b) const;
};

// TensorWord w with lambda(w) = Phi(g) on the probes, read off from the
// Phi integrand at phi = e. Requires the support-constrained probes (psi_0
// eliminated) and underived f_0.
Tensor representative_word(const PhiMap &pm, const Fn &integrand, int l);

// HP parity of the image of a class of the given degree: 0 even, 1 odd.
int hp_parity(int degree, size_t dim_g1);

} // namespace hcc
