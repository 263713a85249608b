#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hcc {

using Q = mpq_class;

std::string to_string(const Q &q);
Q factorial(int n);
Q binomial(int n, int k);

class Error : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

// Interned variable name. Ordering is by the name itself.
class Sym {
  public:
	Sym() = default;
	explicit Sym(std::string_view name);
	const std::string &name() const { return *p_; }
	bool operator==(const Sym &o) const { return p_ == o.p_; }
	std::strong_ordering operator<=>(const Sym &o) const;

  private:
	const std::string *p_ = nullptr;
};

struct TrigPow {
	Sym v;
	int s = 0; // 0 or 1 after canonicalization
	int c = 0;
	bool operator==(const TrigPow &) const = default;
};

struct Mono {
	std::vector<std::pair<Sym, int>> vars; // sorted, exponents > 0
	std::vector<TrigPow> trig;             // sorted by v, (s,c) != (0,0)
	int sqrtpi = 0;                        // power of sqrt(pi)
	long rad = 1;                          // squarefree radicand
	Q ex = 0;                              // factor exp(ex)

	bool is_one() const { return vars.empty() && trig.empty() && sqrtpi == 0 && rad == 1 && ex == 0; }
	int degree() const;
	int degree_in(const Sym &v) const;
	bool operator==(const Mono &o) const;
	bool operator<(const Mono &o) const;
};

class ScalarExpr {
  public:
	using Terms = std::map<Mono, Q>;

	ScalarExpr() = default;
	ScalarExpr(long v);
	ScalarExpr(const Q &q);
	static ScalarExpr var(const Sym &v);
	static ScalarExpr var(std::string_view v) { return var(Sym(v)); }
	static ScalarExpr sin(const Sym &v);
	static ScalarExpr cos(const Sym &v);
	static ScalarExpr sqrt_pi(int power = 1);
	static ScalarExpr sqrt_int(long n);
	static ScalarExpr exp_of(const Q &q);
	static ScalarExpr from_mono(const Mono &m, const Q &c);

	const Terms &terms() const { return t_; }
	bool is_zero() const { return t_.empty(); }
	bool is_constant() const;
	// Rational value; throws unless the expression is a plain rational.
	Q constant() const;
	Q constant_term() const;
	bool is_polynomial() const; // no trig, radicals, exp or sqrt(pi)
	std::vector<Sym> variables() const;
	bool depends_on(const Sym &v) const;
	int degree_in(const Sym &v) const;
	int total_degree() const;

	ScalarExpr operator-() const;
	ScalarExpr &operator+=(const ScalarExpr &o);
	ScalarExpr &operator-=(const ScalarExpr &o);
	ScalarExpr &operator*=(const ScalarExpr &o);
	ScalarExpr &operator*=(const Q &q);
	friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr &b) { return a += b; }
	friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr &b) { return a -= b; }
	friend ScalarExpr operator*(const ScalarExpr &a, const ScalarExpr &b);
	friend ScalarExpr operator*(ScalarExpr a, const Q &q) { return a *= q; }
	friend ScalarExpr operator*(const Q &q, ScalarExpr a) { return a *= q; }
	bool operator==(const ScalarExpr &o) const { return t_ == o.t_; }
	bool operator!=(const ScalarExpr &o) const { return !(t_ == o.t_); }
	bool operator<(const ScalarExpr &o) const { return t_ < o.t_; }

	ScalarExpr pow(int n) const;
	ScalarExpr diff(const Sym &v) const;
	// Simultaneous substitution. Trig arguments must map to integer linear
	// combinations of variables.
	ScalarExpr subst(const std::map<Sym, ScalarExpr> &s) const;
	ScalarExpr subst(const Sym &v, const ScalarExpr &e) const { return subst(std::map<Sym, ScalarExpr>{{v, e}}); }
	// Coefficient of a pure variable monomial in the listed variables.
	std::map<std::vector<int>, ScalarExpr> split(const std::vector<Sym> &vars) const;
	double eval(const std::map<Sym, double> &vals) const;

	std::string text() const;
	std::string latex() const;
	std::string expr() const;

	void add_term(const Mono &m, const Q &c);

  private:
	Terms t_;
};

ScalarExpr parse_scalar(std::string_view src);

std::string latex_name(const std::string &name);
std::string text_name(const std::string &name);

// sin and cos of an integer linear combination of variables.
std::pair<ScalarExpr, ScalarExpr> trig_of_linear(const ScalarExpr &arg);

inline ScalarExpr X(std::string_view v) { return ScalarExpr::var(v); }

} // namespace hcc
