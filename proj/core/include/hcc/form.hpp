#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcc/scalar.hpp"

namespace hcc {

// Generator symbols of the exterior algebra. Differentials of coordinates
// are stored as "d:<coord>"; anything else (e.g. a Lie coframe "theta_1")
// is an abstract degree-one generator.
Sym dsym(const Sym &coord);
bool is_differential(const Sym &g);
Sym coord_of(const Sym &g);

class PolyForm {
  public:
	using Key = std::vector<Sym>; // strictly increasing
	using Terms = std::map<Key, ScalarExpr>;

	PolyForm() = default;
	PolyForm(const ScalarExpr &s);
	PolyForm(long v) : PolyForm(ScalarExpr(v)) {}
	static PolyForm gen(const Sym &g);
	static PolyForm d(const Sym &coord) { return gen(dsym(coord)); }
	static PolyForm d(std::string_view coord) { return d(Sym(coord)); }
	// Build from an arbitrary (unsorted) generator list; sign of the sort is applied.
	static PolyForm monomial(std::vector<Sym> gens, const ScalarExpr &c);

	const Terms &terms() const { return t_; }
	bool is_zero() const { return t_.empty(); }
	// Degree of a homogeneous form; -1 for zero; throws if inhomogeneous.
	int degree() const;
	PolyForm homogeneous_part(int k) const;
	ScalarExpr coeff(const Key &k) const;
	ScalarExpr scalar() const { return coeff({}); }

	PolyForm operator-() const;
	PolyForm &operator+=(const PolyForm &o);
	PolyForm &operator-=(const PolyForm &o);
	PolyForm &operator*=(const ScalarExpr &s);
	friend PolyForm operator+(PolyForm a, const PolyForm &b) { return a += b; }
	friend PolyForm operator-(PolyForm a, const PolyForm &b) { return a -= b; }
	friend PolyForm operator*(PolyForm a, const ScalarExpr &s) { return a *= s; }
	friend PolyForm operator*(const ScalarExpr &s, PolyForm a) { return a *= s; }
	bool operator==(const PolyForm &o) const { return t_ == o.t_; }
	bool operator!=(const PolyForm &o) const { return !(t_ == o.t_); }

	PolyForm wedge(const PolyForm &o) const;
	// Exterior derivative; coefficients are differentiated only in `coords`.
	PolyForm d(const std::vector<Sym> &coords) const;
	// Replace coordinates by expressions. Differentials d:c are replaced by
	// d(subst[c]) taken over `coords`. Every differential generator present
	// must have an entry in subst.
	PolyForm pullback(const std::map<Sym, ScalarExpr> &subst, const std::vector<Sym> &coords) const;
	// Substitute coefficient variables only (generators untouched).
	PolyForm subst_coeffs(const std::map<Sym, ScalarExpr> &subst) const;
	// Replace generators by forms (e.g. coframe -> Maurer-Cartan forms).
	PolyForm substitute_generators(const std::map<Sym, PolyForm> &g) const;
	// Interior product with the dual of generator g.
	PolyForm contract(const Sym &g) const;
	// Drop every term containing one of the listed generators.
	PolyForm drop(const std::vector<Sym> &gens) const;
	template <class F> PolyForm map_coeffs(F f) const
	{
		PolyForm r;
		for (auto &[k, c] : t_)
			r.add(k, f(c));
		return r;
	}

	std::string text() const;
	std::string latex() const;
	std::string expr() const;

	void add(const Key &k, const ScalarExpr &c);

  private:
	Terms t_;
};

inline PolyForm operator^(const PolyForm &a, const PolyForm &b) { return a.wedge(b); }

// Expression grammar: rationals, + - * /, ^int, sin, cos, sqrt(int),
// exp(rational), sqrtpi, d(name) for differentials, names with optional
// two-point suffix ".1"/".2". In forms, * between forms is the wedge.
PolyForm parse_form(std::string_view src);

std::string gen_text(const Sym &g);
std::string gen_latex(const Sym &g);
std::string gen_expr(const Sym &g);

} // namespace hcc
