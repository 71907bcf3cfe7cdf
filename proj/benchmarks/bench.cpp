#include <benchmark/benchmark.h>

#include "derham/completion.hpp"
#include "derham/parse.hpp"
#include "derham/residue.hpp"

using namespace derham;

namespace {

const Hypersurface& curve() {
  static Hypersurface hs =
      make_hypersurface(parse_poly("x*y^2 - x - 1", 2));
  return hs;
}

const Certificate& curve_cert() {
  static Certificate cert = *certify_smooth(curve().f);
  return cert;
}

void BM_certificate_search(benchmark::State& state) {
  Poly f = parse_poly("x*y^2 - x - 1", 2);
  for (auto _ : state) {
    auto cert = certify_smooth(f);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_certificate_search);

void BM_build_psi(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PsiData psi = build_psi(curve(), curve_cert(), N);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_build_psi)->Arg(1)->Arg(2)->Arg(4);

void BM_psi_hat_inv(benchmark::State& state) {
  PsiData psi = build_psi(curve(), curve_cert(), 3);
  Poly a = parse_poly("x^2*y^2 + 3*x*y - 7", 2);
  for (auto _ : state) {
    SeriesB s = psi_hat_inv(psi, a, 3);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_psi_hat_inv);

void BM_residue(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  PsiData psi = build_psi(curve(), curve_cert(), s);
  AForm num = aform_zero(2, 2);
  aform_add_term(num, {0, 1}, parse_poly("x*y^2 + y - 3", 2));
  LocForm omega{num, s};
  for (auto _ : state) {
    ResidueResult r = residue(curve(), psi, omega);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_residue)->Arg(1)->Arg(2);

void BM_spanning_set_residues(benchmark::State& state) {
  PsiData psi = build_psi(curve(), curve_cert(), 2);
  auto span = spanning_set(curve(), 1);
  for (auto _ : state) {
    for (const LocForm& w : span) {
      ResidueResult r = residue(curve(), psi, w);
      benchmark::DoNotOptimize(r);
    }
  }
}
BENCHMARK(BM_spanning_set_residues);

} // namespace

BENCHMARK_MAIN();
