#pragma once

#include <string>
#include <vector>

#include "hcc/form.hpp"
#include "hcc/lie.hpp"
#include "hcc/linalg.hpp"
#include "hcc/simplex.hpp"

namespace hcc {

using Point = std::vector<ScalarExpr>;

struct Check {
	std::string name;
	bool ok = true;
	std::string detail;
};

// Symbol for coordinate c at vertex / point label k: "x_0", "x_a".
Sym vertex_sym(const Sym &c, const std::string &k);
inline Sym vertex_sym(const Sym &c, int k) { return vertex_sym(c, std::to_string(k)); }
// Two-point law variable "x.1" / "x.2".
Sym point_sym(const Sym &c, int which);

// Matched pair of groups G1, G2 in exponential coordinates. The group laws
// use two-point variables "<c>.1", "<c>.2"; the action laws are written in
// the plain G2 coordinates (psi) and G1 coordinates (phi).
class GroupModel {
  public:
	std::vector<Sym> c1, c2;
	std::vector<ScalarExpr> mul1, mul2;
	std::vector<ScalarExpr> inv1, inv2;
	std::vector<ScalarExpr> left;  // psi |> phi, G1 coordinates
	std::vector<ScalarExpr> right; // psi <| phi, G2 coordinates
	std::vector<Sym> h2;           // reductive block; must be empty

	size_t d1() const { return c1.size(); }
	size_t d2() const { return c2.size(); }
	Point zero1() const { return Point(d1()); }
	Point zero2() const { return Point(d2()); }
	Point vars1() const;
	Point vars2() const;
	Point labeled1(const std::string &k) const;
	Point labeled2(const std::string &k) const;

	Point mul_1(const Point &a, const Point &b) const;
	Point mul_2(const Point &a, const Point &b) const;
	Point inv_1(const Point &a) const;
	Point inv_2(const Point &a) const;
	Point act_left(const Point &psi, const Point &phi) const;
	Point act_right(const Point &psi, const Point &phi) const;

	// gamma[i][j] = <psi^{-1} |> Z_i, w_j>, polynomial in c2.
	SMat gamma() const;
	// Gamma(psi)(phi) = gamma(psi <| phi), in c2 and c1.
	SMat big_gamma() const;
	ScalarExpr sigma() const;

	// Maurer-Cartan frames theta = J(g)^{-1} dg per factor, J = d(g h)/dh at h = e.
	std::vector<PolyForm> frame1() const;
	std::vector<PolyForm> frame2() const;
	std::vector<PolyForm> frame() const;
	std::vector<Sym> all_coords() const;

	// nu(phi, psi) = phi (psi <| phi)^{-1} as (G1 coords, G2 coords).
	Point nu(const Point &phi, const Point &psi) const;
	// nu composed with the inversion psi -> psi^{-1}.
	Point nu_hat(const Point &phi, const Point &psi) const;

	AffineSimplex build_simplex(const std::vector<Point> &vertices) const;

	std::vector<Check> check_axioms() const;
	Check check_affine() const;
	std::vector<Check> check_frames() const;

  private:
	static Point law(const std::vector<ScalarExpr> &l, const std::vector<Sym> &c, const Point &a, const Point &b);
};

// Group law from BCH for a nilpotent algebra of class <= 3, exponential coordinates.
void bch_law(const LieAlgebra &g, const std::vector<Sym> &coords, std::vector<ScalarExpr> &mul,
             std::vector<ScalarExpr> &inv);

std::map<Sym, ScalarExpr> point_subst(const std::vector<Sym> &coords, const Point &p);

} // namespace hcc
