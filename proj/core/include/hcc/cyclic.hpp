#pragma once

#include <vector>

#include "hcc/conv.hpp"
#include "hcc/hopf.hpp"

namespace hcc {

// Cocyclic module H^natural with coefficients in the modular pair (delta, sigma).
// Words of length n live in C^n = H^{(x) n}.
class CyclicModule {
  public:
	explicit CyclicModule(const Hopf &h) : h_(h) {}
	const Hopf &hopf() const { return h_; }

	// delta_i : C^{n-1} -> C^n, 0 <= i <= n (n = input length + 1)
	Tensor face(const Tensor &w, int i) const;
	// sigma_i : C^{n+1} -> C^n, 0 <= i <= n
	Tensor degeneracy(const Tensor &w, int i) const;
	// tau_n on C^n
	Tensor tau(const Tensor &w) const;
	Tensor tau_pow(const Tensor &w, int k) const;
	Tensor b(const Tensor &w) const;
	Tensor B(const Tensor &w) const;

	static int length(const Tensor &w);

  private:
	const Hopf &h_;
};

Tensor word(const std::vector<HElem> &hs);
Tensor tensor_add(const Tensor &a, const Tensor &b, const Q &s = 1);

// Degree-bounded test words of length n built from a generator pool.
std::vector<Tensor> sample_words(const Hopf &h, int n, size_t count, unsigned seed, int rdeg = 1, int udeg = 1);

std::vector<Check> check_cyclic(const CyclicModule &c, int max_n, size_t per_n);

// tau(ab) = tau(b sigma(a)), tau(h(a)) = delta(h) tau(a), tau(h(a) b) = tau(a S_delta(h)(b))
// on random Hermite-class elements p(theta) e^{-|theta|^2} U*_psi, psi in {e, v, v^-1}.
std::vector<Check> check_trace_identities(const Hopf &h, const Conv &cv, size_t cases, unsigned seed = 7);

// lambda(h^1 (x) ... (x) h^n)(a^0, ..., a^n) = tau(a^0 h^1(a^1) ... h^n(a^n))
Integral characteristic_map(const Hopf &h, const Conv &cv, const Tensor &w, const std::vector<ConvTerms> &a);

} // namespace hcc
