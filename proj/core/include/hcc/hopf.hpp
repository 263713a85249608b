#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcc/group.hpp"
#include "hcc/model.hpp"

namespace hcc {

// Exponent vector: a monomial in the G2 coordinates (for R) or a PBW
// monomial Z_1^{a_1}...Z_n^{a_n} (for U).
using Exp = std::vector<int>;
using RFun = std::map<Exp, Q>;  // polynomial representative function
using UElem = std::map<Exp, Q>; // element of U(g1) in the PBW basis

struct HKey {
	Exp f; // R monomial
	Exp u; // PBW monomial
	auto operator<=>(const HKey &) const = default;
};
// sum F_I |>< Z_I expanded over monomials
using HElem = std::map<HKey, Q>;
// tensor words of fixed length n; the empty key is the scalar word
using Tensor = std::map<std::vector<HKey>, Q>;

template <class K> void acc(std::map<K, Q> &m, const K &k, const Q &c)
{
	if (c == 0)
		return;
	auto [it, ins] = m.try_emplace(k, c);
	if (!ins) {
		it->second += c;
		if (it->second == 0)
			m.erase(it);
	}
}
template <class K> void acc_all(std::map<K, Q> &m, const std::map<K, Q> &o, const Q &s = 1)
{
	for (auto &[k, c] : o)
		acc(m, k, c * s);
}
template <class K> std::map<K, Q> scaled(const std::map<K, Q> &m, const Q &s)
{
	std::map<K, Q> r;
	acc_all(r, m, s);
	return r;
}

// Hopf structures for R(G2), U(g1) and H = (R(G2) |>< U(g1))^cop.
// The cop flip is explicit: coproduct() is Delta_H, coproduct_bowtie() is the
// unflipped one; antipode() is S_H = S_bowtie^{-1}.
class Hopf {
  public:
	explicit Hopf(const Model &m);
	Hopf(const Hopf &) = delete;
	Hopf &operator=(const Hopf &) = delete;

	size_t d1() const { return d1_; }
	size_t d2() const { return d2_; }
	const Model &model() const { return m_; }
	const std::vector<Sym> &coords() const { return c2_; }

	// R(G2)
	RFun rf(const ScalarExpr &e) const;
	ScalarExpr rf_expr(const RFun &f) const;
	RFun rf_coord(size_t j) const;
	RFun rf_one() const;
	RFun rf_mul(const RFun &a, const RFun &b) const;
	std::map<std::pair<Exp, Exp>, Q> rf_coproduct(const RFun &f) const;
	RFun rf_antipode(const RFun &f) const;
	Q rf_counit(const RFun &f) const;
	// Z_i |> F and u |> F
	RFun act(size_t i, const RFun &f) const;
	RFun act(const Exp &u, const RFun &f) const;
	const std::vector<std::vector<RFun>> &gamma() const { return gamma_; }
	const RFun &sigma() const { return sigma_; }
	const RFun &sigma_inv() const { return sigma_inv_; }

	// U(g1)
	Exp u_zero() const { return Exp(d1_, 0); }
	Exp u_gen(size_t i) const;
	UElem u_mul(const Exp &a, const Exp &b) const;
	UElem u_mul(const UElem &a, const UElem &b) const;
	std::map<std::pair<Exp, Exp>, Q> u_coproduct(const Exp &a) const;
	UElem u_antipode(const Exp &a) const;
	Q u_counit(const Exp &a) const;
	// right coaction U -> U (x) R
	const std::map<std::pair<Exp, Exp>, Q> &coaction(const Exp &a) const;
	Q delta_u(const Exp &a) const;

	// H
	HElem one() const;
	HElem elem(const RFun &f, const Exp &u) const;
	HElem from_rf(const RFun &f) const { return elem(f, u_zero()); }
	HElem gen_z(size_t i) const { return elem(rf_one(), u_gen(i)); }
	HElem mul(const HElem &a, const HElem &b) const;
	Tensor coproduct_bowtie(const HElem &a) const;
	Tensor coproduct(const HElem &a) const;
	Q counit(const HElem &a) const;
	HElem antipode_bowtie(const HElem &a) const;
	HElem antipode(const HElem &a) const;
	Q delta(const HElem &a) const;
	HElem s_delta(const HElem &a) const;
	HElem sigma_elem() const { return from_rf(sigma_); }
	HElem sigma_inv_elem() const { return from_rf(sigma_inv_); }

	// Overrides for negative tests.
	void set_delta(const QVec &d) { delta_ = d; }
	void set_sigma(const RFun &s, const RFun &si) { sigma_ = s, sigma_inv_ = si; }

	// Tensor helpers
	Tensor tensor1(const HElem &a) const;
	Tensor tensor_mul(const Tensor &a, const Tensor &b) const; // slotwise
	Tensor tensor_cat(const Tensor &a, const Tensor &b) const;
	// apply a linear map HElem -> Tensor at a slot (slot replaced by the output word)
	template <class F> Tensor at_slot(const Tensor &t, size_t slot, F f) const
	{
		Tensor r;
		for (auto &[w, c] : t) {
			Tensor img = f(HElem{{w.at(slot), Q(1)}});
			for (auto &[iw, ic] : img) {
				std::vector<HKey> nw(w.begin(), w.begin() + static_cast<long>(slot));
				nw.insert(nw.end(), iw.begin(), iw.end());
				nw.insert(nw.end(), w.begin() + static_cast<long>(slot) + 1, w.end());
				acc(r, nw, c * ic);
			}
		}
		return r;
	}
	Tensor iterated_coproduct(const HElem &a, int n) const; // Delta^{n-1}, n legs

	std::string text(const HElem &a) const;
	std::string text(const Tensor &t) const;
	std::string rf_text(const RFun &f) const { return rf_expr(f).text(); }

  private:
	const Model &m_;
	size_t d1_, d2_;
	std::vector<Sym> c2_;
	std::vector<std::vector<RFun>> gamma_; // gamma_[i][j]
	std::vector<std::vector<RFun>> vel_;   // vel_[i][j] = d(psi <| exp tZ_i)_j/dt at 0
	RFun sigma_, sigma_inv_;
	QVec delta_;
	std::vector<ScalarExpr> mul2_, inv2_;

	mutable std::map<Exp, std::map<std::pair<Exp, Exp>, Q>> cop_memo_;
	mutable std::map<std::pair<size_t, Exp>, UElem> gen_memo_;
	mutable std::map<Exp, std::map<std::pair<Exp, Exp>, Q>> coact_memo_;
	mutable std::map<std::pair<Exp, Exp>, RFun> act_memo_;

	const UElem &mul_gen_left(size_t i, const Exp &a) const;
	std::map<std::pair<Exp, Exp>, Q> coact_rec(const Exp &a) const;
	HElem antipode_gen(const HKey &k) const;
};

// Degree-bounded generator sets.
std::vector<Exp> exps_upto(size_t n, int deg);
std::vector<HElem> hopf_basis(const Hopf &h, int rdeg, int udeg);

// Identity checks; each returns "" on success or a counterexample.
std::vector<Check> check_rep_hopf(const Hopf &h, int rdeg);
std::vector<Check> check_u_hopf(const Hopf &h, int udeg);
std::vector<Check> check_h_hopf(const Hopf &h, int rdeg, int udeg);
std::vector<Check> check_matched_hopf(const Hopf &h, int rdeg, int udeg);
std::vector<Check> check_mpi(const Hopf &h, int rdeg);
std::vector<Check> check_sayd(const Hopf &h, int rdeg, int udeg);

} // namespace hcc
