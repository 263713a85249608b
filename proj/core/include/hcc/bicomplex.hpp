#pragma once

#include <functional>
#include <map>
#include <vector>

#include "hcc/cochain.hpp"
#include "hcc/hopf.hpp"

namespace hcc {

// alpha (x) F^1 (x) ... (x) F^n, alpha a basis element of wedge^q g1^* (sorted
// g1 indices), F^i monomials of R(G2).
using RWord = std::map<std::pair<std::vector<int>, std::vector<Exp>>, Q>;
// F^1 (x) ... (x) F^p (x) u^1 (x) ... (x) u^q, R monomials then PBW monomials.
using PairWord = std::map<std::pair<std::vector<Exp>, std::vector<Exp>>, Q>;

int rword_length(const RWord &w);
RWord rword_add(const RWord &a, const RWord &b, const Q &s = 1);

class Bicomplex {
  public:
	explicit Bicomplex(const Hopf &h);
	const Hopf &hopf() const { return h_; }

	// left coaction on wedge g1^*: omega^i -> S(gamma^i_j) (x) omega^j
	std::map<std::pair<Exp, std::vector<int>>, Q> coact_form(const std::vector<int> &I) const;
	// u -> u_<0> (x) u_<1> (x) ... (x) u_<n>
	std::map<std::pair<Exp, std::vector<Exp>>, Q> iter_coaction(const Exp &u, int n) const;

	// step 1: words alpha (x) F^1 ... F^p
	RWord b1(const RWord &w) const;
	RWord tau1(const RWord &w) const;
	RWord sigma1(const RWord &w) const;
	RWord B1(const RWord &w) const;
	RWord dg1(const RWord &w) const;
	// Z_i acting on R^{(x) p} through the coproduct of R |>< U
	RWord twisted_act(size_t i, const RWord &w) const;

	// step 2: words alpha (x) F^0 ... F^p
	RWord b2(const RWord &w) const;
	RWord tau2(const RWord &w) const;
	RWord sigma2(const RWord &w) const;
	RWord B2(const RWord &w) const;
	RWord dg2(const RWord &w) const;

	RWord I(const RWord &w) const;
	RWord I_inv(const RWord &w) const;
	bool coinvariant(const RWord &w, std::string *why = nullptr) const;

	// step 3
	RWord alpha_R(const RWord &w) const;
	GCochain J(const RWord &w) const;
	GCochain b3(const GCochain &c) const;
	GCochain dg3(const GCochain &c) const;
	// split a polynomial cochain into a sum of step-2 words (monomials per vertex)
	RWord preimage(const GCochain &c) const;

	// appendix
	PairWord psi_bowtie(const Tensor &w) const;
	Tensor psi_bowtie_inv(const PairWord &w) const;

	// Poincare map: iota(eta) varpi, iota(Z_i1 ^ ... ^ Z_ik) = iota(Z_ik) o ... o iota(Z_i1)
	LieCochain poincare(const std::vector<int> &eta) const;
	LieCochain volume() const;

	// sign of the omega^i ^ (Z_i |> .) term of the Lie coboundary
	int dg_sign() const { return dg_sign_; }
	void set_dg_sign(int s) { dg_sign_ = s; }

  private:
	const Hopf &h_;
	const Model &m_;
	size_t d1_, d2_;
	LieAlgebra g1_;
	std::vector<std::vector<ScalarExpr>> vel_; // vel_[i][j]: d/dt (psi <| exp tZ_i)_j at 0
	int dg_sign_ = 1;

	RFun mono(const Exp &e) const { return RFun{{e, Q(1)}}; }
	RWord rmap_slot(const RWord &w, size_t slot, const std::function<std::map<std::vector<Exp>, Q>(const Exp &)> &f) const;
	RWord dg_generic(const RWord &w, const std::function<RWord(size_t, const RWord &)> &act) const;
	RWord diag_act(size_t i, const RWord &w) const;
	ScalarExpr eval_at_vertex(const Exp &f, int k) const;
};

// Bicosimplicial module interface for the Alexander-Whitney and shuffle maps.
struct Bicosimplicial {
	std::function<PairWord(const PairWord &, int)> hface, vface, hdeg, vdeg;
};

// cobar structure on R^{(x) p} (x) U^{(x) q}
Bicosimplicial cobar_bicosimplicial(const Hopf &h);

// AW_{p,q}: X^{p,q} -> X^{p+q,p+q}; Sh: X^{n,n} -> sum_{p+q=n} X^{p,q}, restricted to (p,q)
PairWord aw_map(const Bicosimplicial &X, const PairWord &w, int p, int q);
PairWord shuffle_map(const Bicosimplicial &X, const PairWord &w, int p, int q);
// Hochschild differentials: total b_h + (-1)^p b_v, diagonal sum (-1)^i d^h_i d^v_i
PairWord total_b(const Bicosimplicial &X, const PairWord &w, int p, int q);
PairWord diagonal_b(const Bicosimplicial &X, const PairWord &w, int n);

std::vector<Check> check_step1(const Bicomplex &bc, int max_p, size_t per_p);
std::vector<Check> check_step2(const Bicomplex &bc, int max_p, size_t per_p);
std::vector<Check> check_step3(const Bicomplex &bc, int max_p, size_t per_p);
std::vector<Check> check_psi_bowtie(const Bicomplex &bc, int max_n);
std::vector<Check> check_aw_sh(const Bicomplex &bc, int max_total, size_t per);
std::vector<Check> check_poincare(const Bicomplex &bc);
// J o alpha_R on the monomial preimage of E(w) reproduces E(w).
std::vector<Check> check_cross_module(const Bicomplex &bc, const CochainMaps &cm, const LieCochain &w,
                                      const std::string &label);

// random words for property tests
std::vector<RWord> sample_rwords(const Hopf &h, int len, size_t count, unsigned seed, int rdeg = 2);

} // namespace hcc
