#include <benchmark/benchmark.h>

#include "bisetcalc/fixtures.hpp"
#include "bisetcalc/laws.hpp"

using namespace biset;

namespace {

SliceObject mixed_s3_object(int copies) {
    ZeroCell b = ZeroCell::point(fixtures::group_s3());
    SliceObject out(b, GSet::empty(b.group()), GMap(GSet::empty(b.group()), b.set, {}));
    auto basis = transitive_classes(b);
    for (int i = 0; i < copies; ++i)
        out = slice_coproduct(out, class_representative(b, basis[i % basis.size()]));
    return out;
}

void bm_classify(benchmark::State& state) {
    SliceObject a = mixed_s3_object((int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classify(a));
}
BENCHMARK(bm_classify)->Arg(2)->Arg(4)->Arg(8);

void bm_push_bullet(benchmark::State& state) {
    OneCell f = fixtures::type1_cell(fixtures::incl_c2_s3());
    ZeroCell b = ZeroCell::point(fixtures::group_c2());
    SliceObject a = class_representative(
        b, classes_up_to_size(b, (int)state.range(0)).back());
    for (auto _ : state) benchmark::DoNotOptimize(push_bullet(f, a));
}
BENCHMARK(bm_push_bullet)->Arg(2)->Arg(4);

void bm_bipullback(benchmark::State& state) {
    auto cells = fixtures::corpus_cells();
    OneCell f = cells[10].cell;  // twisted C2reg -> pt/C4
    for (auto _ : state) benchmark::DoNotOptimize(bipullback(f, f));
}
BENCHMARK(bm_bipullback);

void bm_omega_mul(benchmark::State& state) {
    ZeroCell b = ZeroCell::point(fixtures::group_s3());
    auto basis = transitive_classes(b);
    OmegaElement x = OmegaElement::of_class(b, basis[0]) + OmegaElement::of_class(b, basis[2]);
    for (auto _ : state) benchmark::DoNotOptimize(x * x);
}
BENCHMARK(bm_omega_mul);

void bm_mackey_square(benchmark::State& state) {
    auto cells = fixtures::corpus_cells();
    for (auto _ : state)
        benchmark::DoNotOptimize(check_mackey(cells[4].cell, cells[5].cell, (int)state.range(0)));
}
BENCHMARK(bm_mackey_square)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
