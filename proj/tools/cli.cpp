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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "strokepheno/corpus_io.hpp"
#include "strokepheno/evaluation.hpp"
#include "strokepheno/lexicon.hpp"
#include "strokepheno/pattern_extractor.hpp"
#include "strokepheno/phenotype_engine.hpp"

namespace strokepheno::cli {
namespace {

// Input failure that maps to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

Lexicon effective_lexicon(const std::string& override_path) {
  if (override_path.empty()) return Lexicon::builtin();
  auto in = open_input(override_path);
  try {
    return apply_lexicon_overrides(Lexicon::builtin(), in);
  } catch (const LexiconError& e) {
    throw InputError(override_path + ": " + e.what());
  }
}

struct ExtractArgs {
  std::string frames;
  std::string from_text;
  std::string lexicon;
  std::string out;
};

int cmd_extract(const ExtractArgs& args, std::ostream& err) {
  const Lexicon lexicon = effective_lexicon(args.lexicon);
  std::vector<ReportDocument> reports;
  if (!args.from_text.empty()) {
    auto in = open_input(args.from_text);
    for (const TextReport& text : load_text_reports(in)) {
      reports.push_back(extract_report(text.report_id, text.modality,
                                       text.sentences, lexicon));
    }
  } else {
    auto in = open_input(args.frames);
    reports = parse_reports(in);
  }

  bool invalid = false;
  for (const ReportDocument& report : reports) {
    for (const ValidationFinding& finding : validate_report(report)) {
      err << report.report_id << ": " << describe(finding) << '\n';
      invalid = true;
    }
  }
  if (invalid) return kExitInputError;

  std::vector<PhenotypeRecord> records;
  records.reserve(reports.size());
  for (const ReportDocument& report : reports) {
    records.push_back({report.report_id, classify_report(report, lexicon)});
    err << "report " << report.report_id << ": "
        << records.back().phenotypes.size() << " phenotype(s)\n";
  }
  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw InputError("cannot open " + args.out + " for writing");
  write_phenotypes(std::move(records), out);
  return kExitOk;
}

struct EvaluateArgs {
  std::string gold;
  std::string pred;
  std::vector<std::string> variants;
  bool exclude_unknown_stage = false;
  bool per_report = false;
  std::string out;
};

int cmd_evaluate(const EvaluateArgs& args, std::ostream& out,
                 std::ostream& err) {
  std::vector<Variant> variants;
  for (const std::string& name : args.variants) variants.push_back(parse_variant(name));
  if (variants.empty()) variants.assign(std::begin(kAllVariants), std::end(kAllVariants));

  std::vector<LoadWarning> warnings;
  auto gold_in = open_input(args.gold);
  const auto gold = load_gold(gold_in, &warnings);
  auto pred_in = open_input(args.pred);
  const auto pred = load_predictions(pred_in, &warnings);
  for (const LoadWarning& w : warnings) {
    err << "warning: line " << w.line << ": " << w.message << '\n';
  }

  const EvalOptions options{args.exclude_unknown_stage, args.per_report};
  std::vector<EvalResult> results;
  for (Variant v : variants) {
    try {
      results.push_back(evaluate(gold, pred, v, options));
    } catch (const EvaluationError& e) {
      throw InputError(e.what());
    }
    for (const std::string& w : results.back().warnings) {
      err << "warning: " << w << '\n';
    }
  }
  if (args.out.empty()) {
    write_eval_report(results, out);
  } else {
    std::ofstream file(args.out, std::ios::binary);
    if (!file) throw InputError("cannot open " + args.out + " for writing");
    write_eval_report(results, file);
  }
  return kExitOk;
}

int cmd_validate(const std::string& frames, std::ostream& out) {
  auto in = open_input(frames);
  const auto reports = parse_reports(in);
  std::size_t count = 0;
  for (const ReportDocument& report : reports) {
    for (const ValidationFinding& finding : validate_report(report)) {
      out << report.report_id << ": " << describe(finding) << '\n';
      ++count;
    }
  }
  return count == 0 ? kExitOk : kExitInputError;
}

int cmd_lexicon_dump(const std::string& override_path, std::ostream& out) {
  dump_lexicon(effective_lexicon(override_path), out);
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ischemic stroke phenotyping from spatial frames", "strokepheno"};
  app.require_subcommand(1);

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract", "Classify phenotypes for a corpus");
  auto* frames_opt =
      extract->add_option("--frames", extract_args.frames, "Frame corpus (JSONL)");
  auto* text_opt = extract->add_option("--from-text", extract_args.from_text,
                                       "Raw sentence corpus (JSONL)");
  frames_opt->excludes(text_opt);
  extract->add_option("--lexicon", extract_args.lexicon, "Lexicon override file");
  extract->add_option("--out", extract_args.out, "Phenotype output file")->required();

  EvaluateArgs eval_args;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score predictions against gold");
  evaluate_cmd->add_option("--gold", eval_args.gold, "Gold phenotypes (JSONL)")->required();
  evaluate_cmd->add_option("--pred", eval_args.pred, "Predicted phenotypes (JSONL)")->required();
  evaluate_cmd->add_option("--variant", eval_args.variants,
                           "Variant(s) to score; default all seven");
  evaluate_cmd->add_flag("--exclude-unknown-stage", eval_args.exclude_unknown_stage,
                         "Drop CantDetermine tuples under stage variants");
  evaluate_cmd->add_flag("--per-report", eval_args.per_report,
                         "Include per-report counts");
  evaluate_cmd->add_option("--out", eval_args.out, "Write the report here instead of stdout");

  std::string validate_frames;
  auto* validate = app.add_subcommand("validate", "Check a frame corpus");
  validate->add_option("--frames", validate_frames, "Frame corpus (JSONL)")->required();

  std::string lexicon_override;
  auto* lexicon = app.add_subcommand("lexicon", "Lexicon utilities");
  lexicon->require_subcommand(1);
  auto* dump = lexicon->add_subcommand("dump", "Print the effective lexicon");
  dump->add_option("--lexicon", lexicon_override, "Lexicon override file");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
    if (extract->parsed() && frames_opt->count() + text_opt->count() == 0) {
      throw CLI::RequiredError("--frames or --from-text");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (extract->parsed()) return cmd_extract(extract_args, err);
    if (evaluate_cmd->parsed()) {
      try {
        return cmd_evaluate(eval_args, out, err);
      } catch (const LabelError& e) {
        err << "error: " << e.what() << "\n\n" << evaluate_cmd->help();
        return kExitUsage;
      }
    }
    if (validate->parsed()) return cmd_validate(validate_frames, out);
    if (dump->parsed()) return cmd_lexicon_dump(lexicon_override, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitUsage;
}

}  // namespace strokepheno::cli
