#pragma once

#include <vector>

#include "hcc/form.hpp"

namespace hcc {

struct AffineSimplex {
	std::vector<Sym> coords;                      // ambient coordinates
	std::vector<std::vector<ScalarExpr>> vertices; // p+1 points

	int p() const { return static_cast<int>(vertices.size()) - 1; }
};

// Barycentric parameter names _t01, _t02, ...
Sym simplex_param(int i);

// Substitution x = v0 + sum_i t_i (v_i - v0) for the ambient coordinates.
std::map<Sym, ScalarExpr> simplex_parametrization(const AffineSimplex &s);

// Integral of t^a over the standard p-simplex {t_i >= 0, sum t_i <= 1}.
Q dirichlet(const std::vector<int> &a);

// Integral over the standard simplex of q(t) dt_1...dt_p; q polynomial in t.
ScalarExpr integrate_standard(const ScalarExpr &q, const std::vector<Sym> &t);

// Integral of a degree-p form in the ambient differentials over the simplex.
ScalarExpr integrate_over_simplex(const PolyForm &w, const AffineSimplex &s);

} // namespace hcc
