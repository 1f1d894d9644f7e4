#include <benchmark/benchmark.h>

#include <random>

#include "permpoly/dickson.hpp"
#include "permpoly/expand.hpp"
#include "permpoly/extension.hpp"
#include "permpoly/maps.hpp"
#include "permpoly/params.hpp"
#include "permpoly/verify.hpp"

using namespace permpoly;

namespace {

std::vector<Gf2mElement> random_elements(const BinaryField& f, std::size_t n) {
  std::mt19937_64 rng(42);
  std::vector<Gf2mElement> out(n);
  for (auto& x : out) x = Gf2mElement{static_cast<std::uint32_t>(rng() & f.mask())};
  return out;
}

}  // namespace

static void field_mul_table(benchmark::State& state) {
  const BinaryField f(static_cast<unsigned>(state.range(0)));
  const auto xs = random_elements(f, 1024);
  for (auto _ : state) {
    Gf2mElement acc = BinaryField::one();
    for (auto x : xs) acc = f.mul(acc + x, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(field_mul_table)->Arg(8)->Arg(12)->Arg(16)->Arg(20)->Arg(24);

static void field_mul_clmul(benchmark::State& state) {
  const BinaryField f(static_cast<unsigned>(state.range(0)));
  const auto xs = random_elements(f, 1024);
  for (auto _ : state) {
    Gf2mElement acc = BinaryField::one();
    for (auto x : xs) acc = f.mul_clmul(acc + x, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(field_mul_clmul)->Arg(8)->Arg(16)->Arg(24);

static void field_inv(benchmark::State& state) {
  const BinaryField f(static_cast<unsigned>(state.range(0)));
  auto xs = random_elements(f, 1024);
  for (auto& x : xs) x.bits |= 1;
  for (auto _ : state) {
    for (auto x : xs) benchmark::DoNotOptimize(f.inv(x));
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(field_inv)->Arg(12)->Arg(16)->Arg(24);

static void eval_h(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const BinaryField f(m);
  const FamilyMaps maps(f, derive_params(m, 1, 1, 0, 1));
  const auto xs = random_elements(f, 1024);
  for (auto _ : state) {
    for (auto x : xs) benchmark::DoNotOptimize(maps.h(x));
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(eval_h)->Arg(10)->Arg(16)->Arg(23);

static void ext_mul_inv(benchmark::State& state) {
  const ExtensionField e{BinaryField(static_cast<unsigned>(state.range(0)))};
  std::mt19937_64 rng(7);
  std::vector<ExtElement> zs(512);
  for (auto& z : zs) z = e.from_index(1 + rng() % (e.order() - 1));
  for (auto _ : state) {
    ExtElement acc = ExtensionField::one();
    for (auto z : zs) acc = e.mul(acc, e.inv(z));
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * zs.size());
}
BENCHMARK(ext_mul_inv)->Arg(6)->Arg(10)->Arg(16);

static void dickson_methods(benchmark::State& state) {
  const ExtensionField e{BinaryField(10)};
  const auto method = static_cast<DicksonMethod>(state.range(0));
  const Gf2mElement x{0x2a5};
  for (auto _ : state) benchmark::DoNotOptimize(eval_dickson(e, 1023, x, method));
}
BENCHMARK(dickson_methods)->Arg(0)->Arg(1)->Arg(2);

static void expand_h_poly(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const auto p = derive_params(m, m - 1, 1, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(expand_h(p));
}
BENCHMARK(expand_h_poly)->Arg(8)->Arg(12)->Arg(16);

static void main_theorem_sweep(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const BinaryField f(m);
  const VerifyOptions opts{static_cast<unsigned>(state.range(1)), false};
  for (auto _ : state) benchmark::DoNotOptimize(check_main_theorem(f, 1, opts));
  state.SetItemsProcessed(state.iterations() * 4 * f.order());
}
BENCHMARK(main_theorem_sweep)->Args({12, 1})->Args({16, 1})->Args({16, 4})->Unit(benchmark::kMillisecond);

static void zsumexp_sweep(benchmark::State& state) {
  const BinaryField f(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_zsumexp(f, 1, VerifyOptions{1, false}));
}
BENCHMARK(zsumexp_sweep)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
