#pragma once

#include <map>
#include <vector>

#include "hcc/model.hpp"
#include "hcc/simplex.hpp"

namespace hcc {

// Element of C_R^{p,q}: sum_I c_I(psi_0..psi_p) omega_I, I a sorted q-subset of
// the g1 basis, coefficients polynomial in the vertex coordinates x_0, y_0, ...
struct GCochain {
	int p = 0, q = 0;
	std::map<std::vector<int>, ScalarExpr> c;
	bool is_zero() const { return c.empty(); }
	bool operator==(const GCochain &o) const { return p == o.p && q == o.q && c == o.c; }
	void add(const std::vector<int> &I, const ScalarExpr &v);
};

// Element of D^{p,q}: a q-form on G1 in the coordinate differentials, with
// coefficients in the vertex coordinates and the G1 coordinates.
struct DCochain {
	int p = 0, q = 0;
	PolyForm f;
	bool is_zero() const { return f.is_zero(); }
	bool operator==(const DCochain &o) const { return p == o.p && q == o.q && f == o.f; }
};

class CochainMaps {
  public:
	explicit CochainMaps(const Model &m);
	const Model &model() const { return m_; }
	const GroupModel &group() const { return g_; }

	Point vertex(int k) const { return g_.labeled2(std::to_string(k)); }
	std::vector<Point> vertices(int p) const;

	// omega~ in coordinates via the Maurer-Cartan frame
	PolyForm extend(const LieCochain &w) const;
	// nu* omega~ for nu(phi, psi) = phi (psi <| phi)^{-1}
	PolyForm nu_pullback(const LieCochain &w) const;
	// the same with psi -> psi^{-1} precomposed
	PolyForm nu_hat_pullback(const LieCochain &w) const;
	// mu_q(omega): I -> p-form in the G2 differentials
	std::map<std::vector<int>, PolyForm> mu(const LieCochain &w, int q) const;

	GCochain E(const LieCochain &w, int p, int q) const;
	// all nonzero bidegree components of E(w)
	std::vector<GCochain> E_all(const LieCochain &w) const;
	DCochain Theta(const GCochain &a) const;
	GCochain Theta_inv(const DCochain &d) const;

	GCochain d1(const GCochain &a) const;
	DCochain d1(const DCochain &d) const;
	DCochain d2(const DCochain &d) const;

	// Evaluate coefficients at given G2 points (simultaneous substitution).
	std::map<Sym, ScalarExpr> vertex_subst(const std::vector<Point> &pts) const;
	GCochain at(const GCochain &a, const std::vector<Point> &pts) const;
	DCochain at(const DCochain &d, const std::vector<Point> &pts) const;

	// j followed by natural^{-1}
	LieCochain j(const GCochain &a) const;
	bool strongly_covariant(const DCochain &d, std::string *why = nullptr) const;
	// E(w)(psi_0 psi, ..., psi_p psi) == E(w)(psi_0, ..., psi_p); expected for q = 0 only
	bool right_invariant(const GCochain &a, std::string *why = nullptr) const;
	bool antisymmetric(const GCochain &a, std::string *why = nullptr) const;

  private:
	const Model &m_;
	const GroupModel &g_;
	size_t d1_, d2_;
	std::vector<PolyForm> frame_, frame1_;

	std::map<std::vector<int>, PolyForm> contract_part(const PolyForm &pulled, int q) const;
};

// (d1 + d2) D(w) componentwise; each entry is one bidegree of the total
// coboundary, all must vanish for closed w.
std::vector<DCochain> total_coboundary(const CochainMaps &cm, const std::vector<DCochain> &parts);

std::vector<Check> check_chain_map(const CochainMaps &cm, const LieCochain &w, const std::string &label);
std::vector<Check> check_j_roundtrip(const CochainMaps &cm, int max_degree);
std::vector<Check> check_theta_roundtrip(const CochainMaps &cm, const LieCochain &w, const std::string &label);

} // namespace hcc
