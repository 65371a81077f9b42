// Microbenchmarks for encoding, classification, storing and a full replay.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "scenemem/encoding.hpp"
#include "scenemem/memory_graph.hpp"
#include "scenemem/memory_ops.hpp"
#include "scenemem/replay.hpp"

namespace {

using namespace scenemem;

Signature bench_signature() {
  return Signature({"connected"}, {"CONNECTOR", "LEG"}, {}, {"connected"});
}

Observation stage_observation(int legs, std::int64_t t) {
  Observation obs;
  obs.timestamp = t;
  for (int i = 0; i < 4; ++i) {
    obs.elements["conn" + std::to_string(i)] = {{"CONNECTOR", Degree(1.0)}};
    obs.elements["leg" + std::to_string(i)] = {{"LEG", Degree(1.0)}};
  }
  for (int i = 0; i < legs; ++i) {
    const std::string leg = "leg" + std::to_string(i);
    const std::string conn = "conn" + std::to_string(i);
    obs.assertions.push_back({leg, conn, "connected", Degree(0.75)});
    obs.assertions.push_back({conn, leg, "connected", Degree(0.75)});
  }
  return obs;
}

MemoryGraph chain_memory(int categories) {
  MemoryGraph memory;
  for (int i = 1; i <= categories; ++i) {
    Category cat;
    cat.id = "cat_" + std::to_string(i);
    cat.score = 1.0;
    cat.restrictions.emplace(ReifiedRole{"connected", "LEG"},
                             LeftShoulder(0.2 * i, 0.4));
    cat.restrictions.emplace(ReifiedRole{"connected", "CONNECTOR"},
                             LeftShoulder(0.2 * i, 0.4));
    memory.add_category(std::move(cat));
  }
  return memory;
}

void BM_Encode(benchmark::State& state) {
  const Signature sig = bench_signature();
  const Observation obs = stage_observation(4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(sig, obs));
  }
}
BENCHMARK(BM_Encode);

void BM_Classify(benchmark::State& state) {
  const Signature sig = bench_signature();
  const MemoryGraph memory = chain_memory(static_cast<int>(state.range(0)));
  const EncodedScene scene = encode(sig, stage_observation(3, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(memory, scene));
  }
}
BENCHMARK(BM_Classify)->Arg(4)->Arg(16)->Arg(32);

void BM_Store(benchmark::State& state) {
  const Signature sig = bench_signature();
  const MemoryGraph memory = chain_memory(static_cast<int>(state.range(0)));
  const MemoryParams params;
  const Observation obs = stage_observation(3, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(store(sig, memory, obs, params));
  }
}
BENCHMARK(BM_Store)->Arg(4)->Arg(16);

void BM_Replay68(benchmark::State& state) {
  const Signature sig = bench_signature();
  const MemoryParams params;
  std::vector<Observation> log;
  for (std::int64_t t = 1; t <= 68; ++t) {
    log.push_back(stage_observation(1 + static_cast<int>((t - 1) / 17), t));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(replay(sig, log, params));
  }
}
BENCHMARK(BM_Replay68);

}  // namespace

BENCHMARK_MAIN();
