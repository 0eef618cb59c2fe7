// Copyright 2026 The strokepheno Authors.
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

#include <sstream>

#include "strokepheno/corpus_io.hpp"
#include "strokepheno/evaluation.hpp"
#include "strokepheno/pattern_extractor.hpp"
#include "strokepheno/phenotype_engine.hpp"
#include "synthetic_corpus.hpp"

namespace sp = strokepheno;

namespace {

const sp::Lexicon& lex() { return sp::Lexicon::builtin(); }

std::vector<sp::ReportDocument> corpus(std::size_t n) {
  sp::testing::Rng rng(42);
  std::vector<sp::ReportDocument> reports;
  for (std::size_t i = 0; i < n; ++i) {
    reports.push_back(sp::testing::random_report(rng, lex(), "b" + std::to_string(i)));
  }
  return reports;
}

void BM_ClassifyReport(benchmark::State& state) {
  const auto reports = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& report : reports) {
      benchmark::DoNotOptimize(sp::classify_report(report, lex()));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClassifyReport)->Arg(100)->Arg(1000);

void BM_ExtractFrames(benchmark::State& state) {
  const auto reports = corpus(200);
  std::vector<std::string> sentences;
  for (const auto& report : reports) {
    for (const auto& sentence : report.sentences) sentences.push_back(sentence.text);
  }
  for (auto _ : state) {
    for (const auto& s : sentences) benchmark::DoNotOptimize(sp::extract_frames(s, lex()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(sentences.size()));
}
BENCHMARK(BM_ExtractFrames);

void BM_LoadReports(benchmark::State& state) {
  std::ostringstream out;
  sp::write_reports(corpus(1000), out);
  const std::string text = out.str();
  for (auto _ : state) {
    std::istringstream in(text);
    benchmark::DoNotOptimize(sp::load_reports(in));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<long>(text.size()));
}
BENCHMARK(BM_LoadReports);

void BM_Evaluate(benchmark::State& state) {
  std::vector<sp::PhenotypeRecord> gold;
  std::vector<sp::PhenotypeRecord> pred;
  for (const auto& report : corpus(1000)) {
    auto phenotypes = sp::classify_report(report, lex());
    gold.push_back({report.report_id, phenotypes});
    if (!phenotypes.empty()) phenotypes.erase(phenotypes.begin());
    pred.push_back({report.report_id, phenotypes});
  }
  for (auto _ : state) {
    for (sp::Variant v : sp::kAllVariants) benchmark::DoNotOptimize(sp::evaluate(gold, pred, v));
  }
}
BENCHMARK(BM_Evaluate);

}  // namespace

BENCHMARK_MAIN();
