#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcc/linalg.hpp"

namespace hcc {

// Element of the exterior algebra on the dual of a Lie algebra, keyed by
// strictly increasing basis index tuples.
using LieCochain = std::map<std::vector<int>, Q>;

void lc_add(LieCochain &a, const std::vector<int> &k, const Q &c);
LieCochain lc_wedge(const LieCochain &a, const LieCochain &b);
LieCochain lc_basis(std::vector<int> idx); // sorted with sign
std::string lc_text(const LieCochain &a, const std::vector<std::string> &names);

class LieAlgebra {
  public:
	LieAlgebra() = default;
	explicit LieAlgebra(std::vector<std::string> basis);

	size_t dim() const { return basis_.size(); }
	const std::vector<std::string> &basis() const { return basis_; }
	int index_of(const std::string &name) const;
	// [e_i, e_j] = v; sets [e_j, e_i] = -v as well.
	void set_bracket(int i, int j, const QVec &v);
	void add_structure_constant(int i, int j, int k, const Q &c); // c_{ij}^k (raw, no mirroring)
	const Q &c(int i, int j, int k) const { return c_[i][j][k]; }
	QVec bracket(const QVec &a, const QVec &b) const;
	QVec unit(int i) const;
	// ad matrix: column j holds [e_i, e_j].
	QMat ad(int i) const;

	// Violations of antisymmetry / Jacobi as "lie.antisym i,j" / "lie.jacobi i,j,k".
	std::vector<std::string> check() const;

  private:
	std::vector<std::string> basis_;
	std::vector<std::vector<QVec>> c_; // c_[i][j][k]
};

struct MatchedPairLie {
	LieAlgebra g1, g2;
	// left[a][i]  = e2_a |> e1_i  in g1
	// right[a][i] = e2_a <| e1_i  in g2
	std::vector<std::vector<QVec>> left, right;

	static MatchedPairLie trivial(LieAlgebra g1, LieAlgebra g2);
	QVec act_left(const QVec &y, const QVec &x) const;
	QVec act_right(const QVec &y, const QVec &x) const;
	// Violations of the four compatibility identities, each reported with
	// the offending basis triple.
	std::vector<std::string> validate() const;
};

// Basis order: g1 first, then g2.
LieAlgebra bicrossed_lie(const MatchedPairLie &mp);

// Chevalley-Eilenberg differential, d e^k = -sum_{i<j} c_{ij}^k e^i e^j.
LieCochain ce_d(const LieAlgebra &g, const LieCochain &a);
// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);
QMat ce_matrix(const LieAlgebra &g, int k);
LieCochain interior(const LieCochain &a, const QVec &v);

struct Cohomology {
	std::vector<int> betti;
	std::vector<std::vector<LieCochain>> reps;
};

// Cohomology of the subcomplex of h-basic cochains (h empty: full complex).
Cohomology ce_cohomology(const LieAlgebra &g, const std::vector<QVec> &h = {});
std::vector<LieCochain> basic_cochains(const LieAlgebra &g, const std::vector<QVec> &h, int k);

QVec delta_character(const LieAlgebra &g);

// Bigraded pieces of a cochain on g1 (+) l2: key (q, p) -> ((I, J) -> coeff),
// I indices in g1, J indices in l2 (0-based within l2).
using SplitCochain = std::map<std::pair<int, int>, std::map<std::pair<std::vector<int>, std::vector<int>>, Q>>;
SplitCochain natural_split(const LieCochain &w, int d1);
LieCochain natural_join(const SplitCochain &s, int d1);

} // namespace hcc
