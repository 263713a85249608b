#pragma once

#include <map>
#include <random>
#include <string>

#include "hcc/model.hpp"

#ifndef HCC_SOURCE_DIR
#define HCC_SOURCE_DIR "."
#endif

namespace hcc::test {

inline std::string source_path(const std::string &rel) { return std::string(HCC_SOURCE_DIR) + "/" + rel; }

// builtin models are parsed once per process
inline const Model &model(const std::string &name)
{
	static std::map<std::string, Model> cache;
	auto it = cache.find(name);
	if (it == cache.end())
		it = cache.emplace(name, builtin_model(name)).first;
	return it->second;
}

inline ScalarExpr random_poly(std::mt19937 &rng, const std::vector<std::string> &vars, int terms, int maxdeg)
{
	std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), deg(0, maxdeg);
	ScalarExpr r;
	for (int t = 0; t < terms; ++t) {
		ScalarExpr m = Q(Q(coef(rng)) / den(rng));
		for (auto &v : vars)
			m *= X(v).pow(deg(rng) % (maxdeg + 1));
		r += m;
	}
	return r;
}

inline std::map<Sym, double> random_point(std::mt19937 &rng, const std::vector<std::string> &vars)
{
	std::uniform_real_distribution<double> u(-1.5, 1.5);
	std::map<Sym, double> p;
	for (auto &v : vars)
		p[Sym(v)] = u(rng);
	return p;
}

} // namespace hcc::test
