// Copyright 2026 The deprov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <string>

#include "deprov/environment.h"
#include "deprov/fixtures.h"
#include "deprov/json_io.h"
#include "deprov/provn.h"
#include "deprov/reasoning.h"
#include "deprov/validation.h"

namespace {

using namespace deprov;

// A pipeline of `steps` activities hopping between `envs` sibling
// environments, each activity consuming the previous step's entity.
ProvDocument pipeline(int steps, int envs) {
  ProvDocument doc(EncodingMode::kBundlesPlus);
  doc.declare_namespace("s", "http://synthetic.example/");
  for (int e = 0; e < envs; ++e) {
    create_environment(doc, QualifiedName("s", "env" + std::to_string(e)));
  }
  auto env = [&](int i) {
    return QualifiedName("s", "env" + std::to_string(i % envs));
  };
  auto entity = [](int i) {
    return QualifiedName("s", "data" + std::to_string(i));
  };
  doc.add_element({ElementKind::kEntity, entity(0), {}, {}, {}}, env(0));
  for (int i = 1; i <= steps; ++i) {
    QualifiedName act("s", "step" + std::to_string(i));
    doc.add_element({ElementKind::kActivity, act, {}, {}, {}}, env(i));
    doc.add_element({ElementKind::kEntity, entity(i), {}, {}, {}}, env(i));
    doc.add_relation({RelationKind::kUsed, act, entity(i - 1), {}, {}});
    doc.add_relation({RelationKind::kWasGeneratedBy, entity(i), act, {}, {}});
    doc.add_relation(
        {RelationKind::kWasDerivedFrom, entity(i), entity(i - 1), {}, {}});
  }
  return doc;
}

void BM_ParseFixture(benchmark::State& state) {
  std::string text = serialize_provn(gond_nrds_fixture());
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_document(text));
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseFixture);

void BM_SerializeProvn(benchmark::State& state) {
  ProvDocument doc = pipeline(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(serialize_provn(doc));
  }
}
BENCHMARK(BM_SerializeProvn)->Range(16, 1024);

void BM_JsonRoundTrip(benchmark::State& state) {
  ProvDocument doc = pipeline(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_json(serialize_json(doc)));
  }
}
BENCHMARK(BM_JsonRoundTrip)->Range(16, 1024);

void BM_Validate(benchmark::State& state) {
  ProvDocument doc = pipeline(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(doc));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Validate)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_BackwardChain(benchmark::State& state) {
  int steps = static_cast<int>(state.range(0));
  ProvDocument doc = pipeline(steps, 8);
  QualifiedName tip("s", "data" + std::to_string(steps));
  for (auto _ : state) {
    benchmark::DoNotOptimize(backward_chain(doc, tip));
  }
  state.SetComplexityN(steps);
}
BENCHMARK(BM_BackwardChain)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_FixtureChain(benchmark::State& state) {
  ProvDocument doc = gond_nrds_fixture();
  QualifiedName target("open", "publication_lab1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(backward_chain(doc, target));
  }
}
BENCHMARK(BM_FixtureChain);

}  // namespace

BENCHMARK_MAIN();
