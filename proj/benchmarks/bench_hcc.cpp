#include <benchmark/benchmark.h>

#include "hcc/report.hpp"

using namespace hcc;

namespace {

const Model &diamond()
{
	static const Model m = builtin_model("diamond");
	return m;
}

void BM_Cohomology(benchmark::State &st)
{
	LieAlgebra g = diamond().algebra();
	for (auto _ : st)
		benchmark::DoNotOptimize(ce_cohomology(g));
}
BENCHMARK(BM_Cohomology);

void BM_RealizeTheta234(benchmark::State &st)
{
	LieCochain w = select_class(diamond(), "theta_2*theta_3*theta_4");
	for (auto _ : st) {
		CochainMaps cm(diamond());
		benchmark::DoNotOptimize(cm.E_all(w));
	}
}
BENCHMARK(BM_RealizeTheta234)->Unit(benchmark::kMillisecond);

void BM_PhiMixedPart(benchmark::State &st)
{
	CochainMaps cm(diamond());
	PhiMap pm(cm);
	DCochain d = cm.Theta(cm.E(select_class(diamond(), "theta_2*theta_3*theta_4"), 2, 1));
	auto probes = pm.probes(pm.target_degree(d), true);
	for (auto _ : st)
		benchmark::DoNotOptimize(pm.phi(d, probes));
}
BENCHMARK(BM_PhiMixedPart)->Unit(benchmark::kMillisecond);

void BM_HopfAxioms(benchmark::State &st)
{
	Hopf h(diamond());
	int udeg = static_cast<int>(st.range(0));
	for (auto _ : st)
		benchmark::DoNotOptimize(check_h_hopf(h, 1, udeg));
}
BENCHMARK(BM_HopfAxioms)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TraceIdentities(benchmark::State &st)
{
	Hopf h(diamond());
	Conv cv(diamond());
	int cases = static_cast<int>(st.range(0));
	for (auto _ : st)
		benchmark::DoNotOptimize(check_trace_identities(h, cv, cases));
}
BENCHMARK(BM_TraceIdentities)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_CyclicChecks(benchmark::State &st)
{
	Hopf h(diamond());
	CyclicModule c(h);
	for (auto _ : st)
		benchmark::DoNotOptimize(check_cyclic(c, 3, 4));
}
BENCHMARK(BM_CyclicChecks)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
