#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hcc/hopf.hpp"

namespace hcc {

// Opaque smooth function with a derivative multi-index over the G1 coordinates.
struct FFactor {
	Sym name;
	std::vector<int> der;
	auto operator<=>(const FFactor &) const = default;
};

struct FKey {
	Q gauss = 0;                  // factor exp(-gauss * |theta|^2)
	std::vector<FFactor> factors; // sorted
	bool operator<(const FKey &o) const;
	bool operator==(const FKey &o) const { return gauss == o.gauss && factors == o.factors; }
};

// Test function on G1: sum coeff * exp(-k|theta|^2) * prod formal factors.
// Coefficients may involve G1 coordinates (polynomial and trig) and free
// parameters such as vertex coordinates.
class Fn {
  public:
	using Terms = std::map<FKey, ScalarExpr>;
	Fn() = default;
	Fn(const ScalarExpr &c);
	static Fn gaussian(const ScalarExpr &p, const Q &k = 1);
	static Fn formal(const Sym &name, size_t dim);

	const Terms &terms() const { return t_; }
	bool is_zero() const { return t_.empty(); }
	Fn &operator+=(const Fn &o);
	Fn &operator-=(const Fn &o);
	Fn operator-() const;
	friend Fn operator+(Fn a, const Fn &b) { return a += b; }
	friend Fn operator-(Fn a, const Fn &b) { return a -= b; }
	friend Fn operator*(const Fn &a, const Fn &b);
	bool operator==(const Fn &o) const { return t_ == o.t_; }
	bool operator!=(const Fn &o) const { return !(t_ == o.t_); }
	bool operator<(const Fn &o) const;

	// d/d coords[k]
	Fn diff(const std::vector<Sym> &coords, size_t k) const;
	Fn subst_coeffs(const std::map<Sym, ScalarExpr> &s) const;
	Fn map_coeffs(const std::function<ScalarExpr(const ScalarExpr &)> &f) const;
	bool has_formal() const;
	void add(const FKey &k, const ScalarExpr &c);

	std::string text(const std::vector<Sym> &coords) const;

  private:
	Terms t_;
};

std::string factor_text(const FFactor &f);
std::string factor_expr(const FFactor &f);

// Sum of integrals over G1, key = formal factors (empty: closed value).
// Each entry means  int coeff(theta) * prod factors dtheta.
class Integral {
  public:
	using Terms = std::map<std::vector<FFactor>, ScalarExpr>;
	Integral() = default;
	Integral(const ScalarExpr &v);
	const Terms &terms() const { return t_; }
	bool is_zero() const { return t_.empty(); }
	bool is_closed() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
	ScalarExpr value() const; // closed part; throws if formal terms remain
	Integral &operator+=(const Integral &o);
	Integral operator-() const;
	Integral &operator*=(const ScalarExpr &s);
	friend Integral operator+(Integral a, const Integral &b) { return a += b; }
	friend Integral operator-(Integral a, const Integral &b) { return a += -b; }
	friend Integral operator*(Integral a, const ScalarExpr &s) { return a *= s; }
	bool operator==(const Integral &o) const { return t_ == o.t_; }
	bool operator!=(const Integral &o) const { return !(t_ == o.t_); }
	void add(const std::vector<FFactor> &k, const ScalarExpr &c);
	Integral subst(const std::map<Sym, ScalarExpr> &s) const;

	std::string text(const std::vector<Sym> &coords) const;
	std::string expr() const;

  private:
	Terms t_;
};

// int_{R^n} f dtheta with integration by parts normalization of the formal part.
Integral integrate_fn(const Fn &f, const std::vector<Sym> &coords);
// int theta^n e^{i m theta} e^{-k theta^2} dtheta over R, as (real, imag).
std::pair<ScalarExpr, ScalarExpr> gauss_moment(int n, long m, const Q &k);

using ConvTerms = std::map<Point, Fn>;

// Element sum_j f_j U*_{psi_j} of the crossed product C_c(G1) x| G2.
class Conv {
  public:
	explicit Conv(const Model &m);
	const Model &model() const { return m_; }
	const std::vector<Sym> &coords() const { return c1_; }

	ConvTerms elem(const Fn &f, const Point &psi) const { return {{psi, f}}; }
	ConvTerms add(const ConvTerms &a, const ConvTerms &b) const;
	ConvTerms scale(const ConvTerms &a, const ScalarExpr &s) const;
	// f U*_{psi1} * g U*_{psi2} = f (g o psi1~) U*_{psi2 psi1}
	ConvTerms mul(const ConvTerms &a, const ConvTerms &b) const;
	// g o psi~ , psi~(phi) = psi |> phi
	Fn compose(const Fn &g, const Point &psi) const;
	// (F |>< Z^I)(f U*_psi) = F(psi <| phi) Z~^I(f) U*_psi
	ConvTerms act(const Hopf &h, const HElem &a, const ConvTerms &x) const;
	Fn left_field(size_t i, const Fn &f) const;
	// tau(f U*_psi): integral for psi = e, 0 for concrete psi != e.
	Integral trace(const ConvTerms &x) const;
	// Constant density of the left-invariant volume form in the coordinates.
	Q volume_density() const { return vol_; }

	std::string text(const ConvTerms &x) const;

  private:
	const Model &m_;
	std::vector<Sym> c1_;
	SMat field_;   // field_[k][i]: coefficient of d/dtheta_k in Z~_i
	bool trivial_left_ = true;
	Q vol_ = 1;
};

bool is_identity_point(const Point &p);
bool is_concrete_point(const Point &p);

} // namespace hcc
