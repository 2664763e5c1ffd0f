#include <benchmark/benchmark.h>

#include <random>

#include "isingq/ensemble.hpp"
#include "isingq/generator.hpp"
#include "isingq/grassmann.hpp"

namespace {

isingq::GrassmannElement random_element(int num_vars, int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  isingq::GrassmannElement g = isingq::scalar_element(num_vars, 0.0);
  for (int i = 0; i < terms; ++i) {
    const isingq::BasisMask mask = static_cast<isingq::BasisMask>(rng() & ((1u << num_vars) - 1));
    g = isingq::add(g, isingq::scale(isingq::basis_element(num_vars, mask), coeff(rng)));
  }
  return g;
}

void BM_GrassmannMultiply(benchmark::State& state) {
  const int num_vars = static_cast<int>(state.range(0));
  const isingq::GrassmannElement a = random_element(num_vars, 64, 1);
  const isingq::GrassmannElement b = random_element(num_vars, 64, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(isingq::multiply(a, b));
  }
}
BENCHMARK(BM_GrassmannMultiply)->Arg(12)->Arg(16)->Arg(20);

void BM_SectorGeneratorBuild(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const isingq::LatticeGeometry geometry = isingq::LatticeGeometry::line(sites, 0.5);
  isingq::ModelParams params;
  params.num_species = 8;
  params.mass = 0.7;
  const isingq::SectorBasis basis(isingq::num_variables(geometry, params), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(isingq::build_generator_sector(geometry, params, basis));
  }
}
BENCHMARK(BM_SectorGeneratorBuild)->Arg(8)->Arg(16);

void BM_CayleyEvolve(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> val(-0.2, 0.2);
  std::uniform_int_distribution<int> idx(0, dim - 1);
  std::vector<Eigen::Triplet<double>> trips;
  for (int nz = 0; nz < 5 * dim; ++nz) {
    const int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const double v = val(rng);
    trips.emplace_back(i, j, v);
    trips.emplace_back(j, i, -v);
  }
  isingq::SparseMatrixD K(dim, dim);
  K.setFromTriplets(trips.begin(), trips.end());
  Eigen::VectorXd q = Eigen::VectorXd::Zero(dim);
  q[0] = 1.0;
  isingq::EvolveOptions opts;
  opts.method = isingq::EvolveMethod::Cayley;
  opts.dt = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(isingq::evolve(q, K, 1.0, opts));
  }
}
BENCHMARK(BM_CayleyEvolve)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
