// Copyright 2026 The biodenoise Authors
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


#include "biodenoise/cli.h"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "biodenoise/bioasq_converter.h"
#include "biodenoise/cloze_generator.h"
#include "biodenoise/corpus.h"
#include "biodenoise/dataset.h"
#include "biodenoise/decoding.h"
#include "biodenoise/denoise_generator.h"
#include "biodenoise/entity_catalog.h"
#include "biodenoise/evaluation.h"
#include "biodenoise/file_util.h"
#include "biodenoise/predictions.h"
#include "biodenoise/pubmedqa_converter.h"
#include "biodenoise/pubtator.h"
#include "json.hpp"

namespace biodenoise {
namespace {

constexpr char kToolName[] = "biodenoise";
constexpr size_t kMaxLoggedDiagnostics = 10;

// Input file contents plus digest, keyed by role for the run header.
struct Inputs {
  std::vector<std::pair<std::string, std::string>> digests;

  absl::StatusOr<std::string> Read(const std::string& role,
                                   const std::string& path) {
    absl::StatusOr<std::string> text = ReadFile(path);
    if (text.ok()) digests.emplace_back(role, Sha256Hex(*text));
    return text;
  }
};

nlohmann::json RunHeader(std::string_view command, const nlohmann::json& config,
                         const Inputs& inputs, std::ostream& err) {
  nlohmann::json digests = nlohmann::json::object();
  for (const auto& [role, sha] : inputs.digests) digests[role] = sha;
  const std::string config_sha = Sha256Hex(config.dump());
  err << "[" << kToolName << "] command=" << command;
  if (config.contains("seed")) err << " seed=" << config["seed"].dump();
  err << " config_sha256=" << config_sha;
  for (const auto& [role, sha] : inputs.digests) {
    err << " " << role << "_sha256=" << sha;
  }
  err << "\n";
  return {{"tool", kToolName},
          {"command", command},
          {"config", config},
          {"config_sha256", config_sha},
          {"input_sha256", std::move(digests)}};
}

absl::StatusOr<std::vector<AnnotatedDocument>> LoadCorpus(
    Inputs& inputs, const std::string& path, std::ostream& err) {
  absl::StatusOr<std::string> text = inputs.Read("corpus", path);
  if (!text.ok()) return text.status();
  PubtatorParseResult parsed = ParsePubtatorString(*text);
  if (!parsed.diagnostics.empty()) {
    err << "[" << kToolName << "] " << path << ": "
        << parsed.diagnostics.size() << " diagnostics\n";
    for (size_t i = 0;
         i < parsed.diagnostics.size() && i < kMaxLoggedDiagnostics; ++i) {
      err << "  " << parsed.diagnostics[i].ToString() << "\n";
    }
  }
  return std::move(parsed.documents);
}

absl::StatusOr<DatasetFile> LoadDataset(Inputs& inputs, const std::string& path) {
  absl::StatusOr<std::string> text = inputs.Read("dataset", path);
  if (!text.ok()) return text.status();
  return ParseDataset(*text, path);
}

int Fail(const absl::Status& status, std::ostream& err) {
  err << "[" << kToolName << "] error: " << status << "\n";
  return ExitCodeFor(status);
}

// ---------------------------------------------------------------------------
// Subcommand option blocks.

struct IngestArgs {
  std::string input, out, report;
  bool strict = false;
};

struct CatalogArgs {
  std::string corpus, out;
};

struct DenoiseArgs {
  std::string corpus, catalog, out, summary;
  std::optional<uint64_t> seed;
  GenConfig config;
  std::string task = "span";
  std::string span_question_type = "factoid";
  std::string context_window = "document";
  std::string yes_no_ratio = "1:1:1";
};

struct ClozeArgs {
  std::string corpus, out, summary;
  std::optional<uint64_t> seed;
  ClozeConfig config;
};

struct ConvertArgs {
  std::string format = "bioasq";
  std::string input, out, abstracts;
  std::string context_source = "snippet";
  bool skip_missing_abstracts = false;
};

struct DecodeArgs {
  std::string dataset, predictions, similarity, out;
  DecodeOptions options;
  std::string list_mode = "merged_softmax";
};

struct EvaluateArgs {
  std::string dataset, predictions, decoded, similarity, out, text;
  size_t mrr_window = 5;
};

struct ValidateArgs {
  std::string dataset, corpus, predictions, decoded;
};

void AddDecodeFlags(CLI::App* cmd, DecodeArgs& args) {
  cmd->add_option("--n-best", args.options.n_best,
                  "Candidates kept per context before merging")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--top-k", args.options.top_k, "Factoid answers kept")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-answer-tokens", args.options.max_answer_tokens,
                  "Longest candidate span in tokens")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--list-threshold", args.options.list_threshold,
                  "Minimum list score (inclusive)")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--list-mode", args.list_mode,
                  "Quantity compared with the list threshold")
      ->capture_default_str()
      ->check(CLI::IsMember({"merged_softmax", "sigmoid"}));
  cmd->add_option("--rerank-weight", args.options.rerank_weight,
                  "Weight of similarity scores added to span scores")
      ->capture_default_str();
}

absl::Status FinishDecodeArgs(DecodeArgs& args) {
  args.options.list_mode = args.list_mode == "sigmoid"
                               ? ListScoreMode::kSigmoid
                               : ListScoreMode::kMergedSoftmax;
  return args.options.Validate();
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

int RunIngest(const IngestArgs& args, std::ostream& out, std::ostream& err) {
  Inputs inputs;
  absl::StatusOr<std::string> text = inputs.Read("corpus", args.input);
  if (!text.ok()) return Fail(text.status(), err);
  const PubtatorParseResult parsed = ParsePubtatorString(*text);
  size_t mentions = 0;
  nlohmann::json violations = nlohmann::json::array();
  for (const AnnotatedDocument& doc : parsed.documents) {
    mentions += doc.mentions.size();
    for (const Violation& v : ValidateDocument(doc)) {
      nlohmann::json j = {{"doc_id", doc.doc_id},
                          {"kind", ViolationKindName(v.kind)},
                          {"detail", v.detail}};
      if (v.mention_index != Violation::kNoMention) j["mention"] = v.mention_index;
      violations.push_back(std::move(j));
    }
  }
  nlohmann::json diagnostics = nlohmann::json::array();
  for (const ParseDiagnostic& d : parsed.diagnostics) {
    diagnostics.push_back({{"kind", DiagnosticKindName(d.kind)},
                           {"line", d.line_no},
                           {"doc_id", d.doc_id},
                           {"reason", d.reason}});
  }
  const nlohmann::json report = {
      {"run", RunHeader("ingest", {{"strict", args.strict}}, inputs, err)},
      {"documents", parsed.documents.size()},
      {"mentions", mentions},
      {"diagnostics", diagnostics},
      {"violations", violations}};
  for (const ParseDiagnostic& d : parsed.diagnostics) {
    err << "  " << d.ToString() << "\n";
  }
  if (!args.out.empty()) {
    if (absl::Status s = WriteFileAtomic(args.out, FormatPubtator(parsed.documents));
        !s.ok()) {
      return Fail(s, err);
    }
  }
  if (!args.report.empty()) {
    if (absl::Status s = WriteFileAtomic(args.report, report.dump(2) + "\n");
        !s.ok()) {
      return Fail(s, err);
    }
  }
  out << "documents=" << parsed.documents.size() << " mentions=" << mentions
      << " diagnostics=" << parsed.diagnostics.size()
      << " overlap_warnings=" << violations.size() << "\n";
  if (args.strict && !parsed.diagnostics.empty()) {
    return Fail(absl::InvalidArgumentError(absl::StrCat(
                    parsed.diagnostics.size(), " diagnostics in strict mode")),
                err);
  }
  return kExitOk;
}

int RunCatalog(const CatalogArgs& args, std::ostream& out, std::ostream& err) {
  Inputs inputs;
  absl::StatusOr<std::vector<AnnotatedDocument>> docs =
      LoadCorpus(inputs, args.corpus, err);
  if (!docs.ok()) return Fail(docs.status(), err);
  absl::StatusOr<EntityCatalog> catalog = EntityCatalog::Build(*docs);
  if (!catalog.ok()) return Fail(catalog.status(), err);
  RunHeader("catalog", nlohmann::json::object(), inputs, err);
  if (absl::Status s = WriteFileAtomic(args.out, catalog->ToJson().dump(2) + "\n");
      !s.ok()) {
    return Fail(s, err);
  }
  out << "types=" << catalog->Types().size()
      << " surfaces=" << catalog->total_surfaces() << "\n";
  return kExitOk;
}

int WriteGenerated(std::string_view command, GenerationResult result,
                   const nlohmann::json& config, const Inputs& inputs,
                   const std::string& out_path, const std::string& summary_path,
                   std::ostream& out, std::ostream& err) {
  DatasetFile dataset =
      MakeDataset(std::move(result.examples), result.summary.ToJson());
  dataset.run = RunHeader(command, config, inputs, err);
  if (absl::Status s = WriteDataset(dataset, out_path); !s.ok()) return Fail(s, err);
  if (!summary_path.empty()) {
    if (absl::Status s =
            WriteFileAtomic(summary_path, result.summary.ToJson().dump(2) + "\n");
        !s.ok()) {
      return Fail(s, err);
    }
  }
  out << result.summary.ToJson().dump() << "\n";
  return kExitOk;
}

int RunDenoise(DenoiseArgs& args, std::ostream& out, std::ostream& err) {
  GenConfig& config = args.config;
  config.seed = *args.seed;
  config.task = *ParseGenTask(args.task);
  config.span_question_type = *ParseQuestionType(args.span_question_type);
  config.context_window = *ParseContextWindow(args.context_window);
  absl::StatusOr<YesNoRatio> ratio = ParseYesNoRatio(args.yes_no_ratio);
  if (!ratio.ok()) return Fail(ratio.status(), err);
  config.yes_no_ratio = *ratio;
  if (absl::Status s = config.Validate(); !s.ok()) return Fail(s, err);

  Inputs inputs;
  absl::StatusOr<std::vector<AnnotatedDocument>> docs =
      LoadCorpus(inputs, args.corpus, err);
  if (!docs.ok()) return Fail(docs.status(), err);
  absl::StatusOr<EntityCatalog> catalog;
  if (args.catalog.empty()) {
    catalog = EntityCatalog::Build(*docs);
  } else {
    absl::StatusOr<std::string> text = inputs.Read("catalog", args.catalog);
    if (!text.ok()) return Fail(text.status(), err);
    const nlohmann::json json =
        nlohmann::json::parse(*text, nullptr, /*allow_exceptions=*/false);
    if (json.is_discarded()) {
      return Fail(absl::InvalidArgumentError(
                      absl::StrCat("MalformedJson: ", args.catalog)),
                  err);
    }
    catalog = EntityCatalog::FromJson(json);
  }
  if (!catalog.ok()) return Fail(catalog.status(), err);
  absl::StatusOr<GenerationResult> result = GenerateCorpus(*docs, *catalog, config);
  if (!result.ok()) return Fail(result.status(), err);
  return WriteGenerated("gen-denoise", *std::move(result), config.ToJson(),
                        inputs, args.out, args.summary, out, err);
}

int RunCloze(ClozeArgs& args, std::ostream& out, std::ostream& err) {
  args.config.seed = *args.seed;
  if (absl::Status s = args.config.Validate(); !s.ok()) return Fail(s, err);
  Inputs inputs;
  absl::StatusOr<std::vector<AnnotatedDocument>> docs =
      LoadCorpus(inputs, args.corpus, err);
  if (!docs.ok()) return Fail(docs.status(), err);
  absl::StatusOr<GenerationResult> result = GenerateClozeCorpus(*docs, args.config);
  if (!result.ok()) return Fail(result.status(), err);
  return WriteGenerated("gen-cloze", *std::move(result), args.config.ToJson(),
                        inputs, args.out, args.summary, out, err);
}

int RunConvert(const ConvertArgs& args, std::ostream& out, std::ostream& err) {
  Inputs inputs;
  absl::StatusOr<std::string> text = inputs.Read("input", args.input);
  if (!text.ok()) return Fail(text.status(), err);
  nlohmann::json config = {{"format", args.format}};
  absl::StatusOr<DatasetFile> dataset;
  if (args.format == "pubmedqa") {
    dataset = ConvertPubmedqa(*text);
  } else {
    BioasqConvertOptions options;
    options.context_source = *ParseContextSource(args.context_source);
    options.skip_missing_abstracts = args.skip_missing_abstracts;
    config["context_source"] = args.context_source;
    config["skip_missing_abstracts"] = args.skip_missing_abstracts;
    std::map<std::string, std::string> abstracts;
    if (options.context_source == ContextSource::kAbstract) {
      if (args.abstracts.empty()) {
        return Fail(absl::FailedPreconditionError(
                        "--abstracts is required with --context-source abstract"),
                    err);
      }
      absl::StatusOr<std::vector<AnnotatedDocument>> docs =
          LoadCorpus(inputs, args.abstracts, err);
      if (!docs.ok()) return Fail(docs.status(), err);
      for (AnnotatedDocument& doc : *docs) {
        abstracts[doc.doc_id] = std::move(doc.text);
      }
      options.abstracts = &abstracts;
    }
    dataset = ConvertBioasq(*text, options);
  }
  if (!dataset.ok()) return Fail(dataset.status(), err);
  dataset->run = RunHeader("convert", config, inputs, err);
  if (absl::Status s = WriteDataset(*dataset, args.out); !s.ok()) return Fail(s, err);
  out << nlohmann::json{{"source_stats", dataset->source_stats},
                        {"stats", dataset->stats.ToJson()}}
             .dump()
      << "\n";
  return kExitOk;
}

// Shared by decode and evaluate.
absl::StatusOr<DecodedFile> DecodeFromFiles(Inputs& inputs,
                                            const DatasetFile& dataset,
                                            const std::string& predictions_path,
                                            const std::string& similarity_path,
                                            const DecodeOptions& options) {
  absl::StatusOr<std::string> text = inputs.Read("predictions", predictions_path);
  if (!text.ok()) return text.status();
  absl::StatusOr<PredictionFile> predictions =
      ParsePredictions(*text, predictions_path);
  if (!predictions.ok()) return predictions.status();
  std::optional<SimilarityScores> similarity;
  if (!similarity_path.empty()) {
    absl::StatusOr<std::string> sims = inputs.Read("similarity", similarity_path);
    if (!sims.ok()) return sims.status();
    absl::StatusOr<SimilarityScores> parsed = ParseSimilarity(*sims);
    if (!parsed.ok()) return parsed.status();
    similarity = *std::move(parsed);
  }
  return DecodeDataset(dataset, *predictions, options,
                       similarity ? &*similarity : nullptr);
}

int RunDecode(DecodeArgs& args, std::ostream& out, std::ostream& err) {
  if (absl::Status s = FinishDecodeArgs(args); !s.ok()) return Fail(s, err);
  Inputs inputs;
  absl::StatusOr<DatasetFile> dataset = LoadDataset(inputs, args.dataset);
  if (!dataset.ok()) return Fail(dataset.status(), err);
  absl::StatusOr<DecodedFile> decoded = DecodeFromFiles(
      inputs, *dataset, args.predictions, args.similarity, args.options);
  if (!decoded.ok()) return Fail(decoded.status(), err);
  decoded->run = RunHeader("decode", args.options.ToJson(), inputs, err);
  if (absl::Status s = WriteFileAtomic(args.out, SerializeDecoded(*decoded));
      !s.ok()) {
    return Fail(s, err);
  }
  out << "questions=" << decoded->questions.size() << "\n";
  return kExitOk;
}

int RunEvaluate(EvaluateArgs& args, DecodeArgs& decode, std::ostream& out,
                std::ostream& err) {
  if (args.predictions.empty() == args.decoded.empty()) {
    err << "exactly one of --predictions or --decoded is required\n";
    return kExitUsage;
  }
  if (absl::Status s = FinishDecodeArgs(decode); !s.ok()) return Fail(s, err);
  Inputs inputs;
  absl::StatusOr<DatasetFile> dataset = LoadDataset(inputs, args.dataset);
  if (!dataset.ok()) return Fail(dataset.status(), err);
  absl::StatusOr<DecodedFile> decoded;
  nlohmann::json config = {{"mrr_window", args.mrr_window}};
  if (!args.predictions.empty()) {
    decoded = DecodeFromFiles(inputs, *dataset, args.predictions,
                              args.similarity, decode.options);
    config["decode"] = decode.options.ToJson();
  } else {
    absl::StatusOr<std::string> text = inputs.Read("decoded", args.decoded);
    if (!text.ok()) return Fail(text.status(), err);
    decoded = ParseDecoded(*text, args.decoded);
  }
  if (!decoded.ok()) return Fail(decoded.status(), err);
  absl::StatusOr<EvaluationReport> report =
      Evaluate(*dataset, *decoded, {args.mrr_window});
  if (!report.ok()) return Fail(report.status(), err);
  report->run = RunHeader("evaluate", config, inputs, err);
  for (const std::string& flag : report->flags) {
    err << "[" << kToolName << "] flag: " << flag << "\n";
  }
  if (absl::Status s = WriteFileAtomic(args.out, SerializeReport(*report));
      !s.ok()) {
    return Fail(s, err);
  }
  if (!args.text.empty()) {
    if (absl::Status s = WriteFileAtomic(args.text, report->ToText()); !s.ok()) {
      return Fail(s, err);
    }
  }
  out << report->ToText();
  return kExitOk;
}

int RunValidate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  if (args.dataset.empty() && args.corpus.empty() && args.predictions.empty() &&
      args.decoded.empty()) {
    err << "nothing to validate; pass --dataset, --corpus, --predictions or "
           "--decoded\n";
    return kExitUsage;
  }
  Inputs inputs;
  std::optional<DatasetFile> dataset;
  if (!args.corpus.empty()) {
    absl::StatusOr<std::string> text = inputs.Read("corpus", args.corpus);
    if (!text.ok()) return Fail(text.status(), err);
    const PubtatorParseResult parsed = ParsePubtatorString(*text);
    for (const ParseDiagnostic& d : parsed.diagnostics) {
      err << "  " << d.ToString() << "\n";
    }
    if (!parsed.diagnostics.empty()) {
      return Fail(absl::InvalidArgumentError(absl::StrCat(
                      args.corpus, ": ", parsed.diagnostics.size(),
                      " diagnostics")),
                  err);
    }
    out << "corpus ok: " << parsed.documents.size() << " documents\n";
  }
  if (!args.dataset.empty()) {
    absl::StatusOr<DatasetFile> parsed = LoadDataset(inputs, args.dataset);
    if (!parsed.ok()) return Fail(parsed.status(), err);
    out << "dataset ok: " << parsed->stats.ToJson().dump() << "\n";
    dataset = *std::move(parsed);
  }
  if (!args.predictions.empty()) {
    absl::StatusOr<std::string> text = inputs.Read("predictions", args.predictions);
    if (!text.ok()) return Fail(text.status(), err);
    absl::StatusOr<PredictionFile> predictions =
        ParsePredictions(*text, args.predictions);
    if (!predictions.ok()) return Fail(predictions.status(), err);
    if (dataset) {
      absl::StatusOr<DecodedFile> decoded =
          DecodeDataset(*dataset, *predictions, DecodeOptions{});
      if (!decoded.ok()) return Fail(decoded.status(), err);
    }
    out << "predictions ok: " << predictions->span.size() << " span, "
        << predictions->yesno.size() << " yes/no records\n";
  }
  if (!args.decoded.empty()) {
    absl::StatusOr<std::string> text = inputs.Read("decoded", args.decoded);
    if (!text.ok()) return Fail(text.status(), err);
    absl::StatusOr<DecodedFile> decoded = ParseDecoded(*text, args.decoded);
    if (!decoded.ok()) return Fail(decoded.status(), err);
    out << "decoded ok: " << decoded->questions.size() << " questions\n";
  }
  return kExitOk;
}

}  // namespace

int ExitCodeFor(const absl::Status& status) {
  if (status.ok()) return kExitOk;
  return IsIoError(status) ? kExitIo : kExitData;
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Biomedical QA data generation, conversion, decoding and "
               "evaluation",
               kToolName};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "TOML or INI config file; flags override it")
      ->envname(kConfigEnvVar);

  IngestArgs ingest;
  CLI::App* ingest_cmd =
      app.add_subcommand("ingest", "Parse and validate a PubTator corpus");
  ingest_cmd->add_option("--input", ingest.input, "PubTator file")
      ->required()
      ->check(CLI::ExistingFile);
  ingest_cmd->add_option("--out", ingest.out, "Canonical PubTator output");
  ingest_cmd->add_option("--report", ingest.report,
                         "JSON report of diagnostics and violations");
  ingest_cmd->add_flag("--strict", ingest.strict,
                       "Exit with a data error when any line is rejected");

  CatalogArgs catalog;
  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "Build the typed entity catalog");
  catalog_cmd->add_option("--corpus", catalog.corpus, "PubTator corpus")
      ->required();
  catalog_cmd->add_option("--out", catalog.out, "Catalog JSON")->required();

  DenoiseArgs denoise;
  CLI::App* denoise_cmd = app.add_subcommand(
      "gen-denoise", "Generate de-noising span and yes/no examples");
  denoise_cmd->add_option("--corpus", denoise.corpus, "PubTator corpus")
      ->required();
  denoise_cmd->add_option("--catalog", denoise.catalog,
                          "Catalog JSON; built from the corpus when absent");
  denoise_cmd->add_option("--out", denoise.out, "Dataset output")->required();
  denoise_cmd->add_option("--summary", denoise.summary, "Summary JSON output");
  denoise_cmd->add_option("--seed", denoise.seed, "Random seed")->required();
  denoise_cmd->add_option("--task", denoise.task, "span, yesno or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"span", "yesno", "all"}));
  denoise_cmd->add_option("--span-question-type", denoise.span_question_type,
                          "Label for span examples")
      ->capture_default_str()
      ->check(CLI::IsMember({"factoid", "list"}));
  denoise_cmd->add_option("--context-window", denoise.context_window,
                          "document or sentence")
      ->capture_default_str()
      ->check(CLI::IsMember({"document", "sentence"}));
  denoise_cmd->add_option("--max-examples-per-doc",
                          denoise.config.max_examples_per_doc)
      ->capture_default_str();
  denoise_cmd->add_flag("--replace-all-occurrences",
                        denoise.config.replace_all_occurrences,
                        "Corrupt every same-type mention with the same surface");
  denoise_cmd->add_flag("--skip-repeated-surface",
                        denoise.config.skip_repeated_surface,
                        "Skip mentions whose surface repeats in the context");
  denoise_cmd->add_option("--min-context-chars", denoise.config.min_context_chars)
      ->capture_default_str();
  denoise_cmd->add_option("--yes-no-ratio", denoise.yes_no_ratio,
                          "yes:no:adversarial slot pattern")
      ->capture_default_str();
  denoise_cmd->add_option("--adversarial-max-retries",
                          denoise.config.adversarial_max_retries)
      ->capture_default_str();
  denoise_cmd->add_option("--workers", denoise.config.workers,
                          "Worker threads; output does not depend on it")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  ClozeArgs cloze;
  CLI::App* cloze_cmd =
      app.add_subcommand("gen-cloze", "Generate cloze-style examples");
  cloze_cmd->add_option("--corpus", cloze.corpus, "PubTator corpus")->required();
  cloze_cmd->add_option("--out", cloze.out, "Dataset output")->required();
  cloze_cmd->add_option("--summary", cloze.summary, "Summary JSON output");
  cloze_cmd->add_option("--seed", cloze.seed, "Random seed")->required();
  cloze_cmd->add_flag("--keep-mask", cloze.config.keep_mask,
                      "Keep the mask token in the question");
  cloze_cmd->add_option("--max-examples-per-doc", cloze.config.max_examples_per_doc)
      ->capture_default_str();
  cloze_cmd->add_option("--min-context-chars", cloze.config.min_context_chars)
      ->capture_default_str();
  cloze_cmd->add_option("--workers", cloze.config.workers)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  ConvertArgs convert;
  CLI::App* convert_cmd = app.add_subcommand(
      "convert", "Convert BioASQ or PubMedQA JSON into the dataset format");
  convert_cmd->add_option("--format", convert.format, "bioasq or pubmedqa")
      ->capture_default_str()
      ->check(CLI::IsMember({"bioasq", "pubmedqa"}));
  convert_cmd->add_option("--input", convert.input, "Source JSON")->required();
  convert_cmd->add_option("--out", convert.out, "Dataset output")->required();
  convert_cmd->add_option("--context-source", convert.context_source,
                          "snippet or abstract (BioASQ)")
      ->capture_default_str()
      ->check(CLI::IsMember({"snippet", "abstract"}));
  convert_cmd->add_option("--abstracts", convert.abstracts,
                          "PubTator corpus holding the abstracts");
  convert_cmd->add_flag("--skip-missing-abstracts",
                        convert.skip_missing_abstracts,
                        "Drop documents without an abstract instead of failing");

  DecodeArgs decode;
  CLI::App* decode_cmd =
      app.add_subcommand("decode", "Turn prediction logits into answers");
  decode_cmd->add_option("--dataset", decode.dataset, "Dataset file")->required();
  decode_cmd->add_option("--predictions", decode.predictions,
                         "Prediction JSON Lines")
      ->required();
  decode_cmd->add_option("--similarity", decode.similarity,
                         "Similarity scores {question_id: {answer: score}}");
  decode_cmd->add_option("--out", decode.out, "Decoded output")->required();
  AddDecodeFlags(decode_cmd, decode);

  EvaluateArgs evaluate;
  DecodeArgs evaluate_decode;
  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "Score decoded answers against gold");
  evaluate_cmd->add_option("--dataset", evaluate.dataset, "Dataset file")
      ->required();
  evaluate_cmd->add_option("--predictions", evaluate.predictions,
                           "Prediction JSON Lines, decoded on the fly");
  evaluate_cmd->add_option("--decoded", evaluate.decoded, "Decoded file");
  evaluate_cmd->add_option("--similarity", evaluate.similarity,
                           "Similarity scores used while decoding");
  evaluate_cmd->add_option("--out", evaluate.out, "Report JSON")->required();
  evaluate_cmd->add_option("--text", evaluate.text, "Plain-text report");
  evaluate_cmd->add_option("--mrr-window", evaluate.mrr_window,
                           "Ranks counted by lenient accuracy and MRR")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  AddDecodeFlags(evaluate_cmd, evaluate_decode);

  ValidateArgs validate;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check files against their formats");
  validate_cmd->add_option("--dataset", validate.dataset, "Dataset file");
  validate_cmd->add_option("--corpus", validate.corpus, "PubTator corpus");
  validate_cmd->add_option("--predictions", validate.predictions,
                           "Prediction JSON Lines (checked against --dataset)");
  validate_cmd->add_option("--decoded", validate.decoded, "Decoded file");

  // The config file is only read for subcommand options when --config
  // precedes the subcommand name, so move it to the front.
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      args.insert(args.begin(), {std::string(arg), argv[++i]});
    } else if (arg.starts_with("--config=")) {
      args.insert(args.begin(), std::string(arg));
    } else {
      args.emplace_back(arg);
    }
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*ingest_cmd) return RunIngest(ingest, out, err);
  if (*catalog_cmd) return RunCatalog(catalog, out, err);
  if (*denoise_cmd) return RunDenoise(denoise, out, err);
  if (*cloze_cmd) return RunCloze(cloze, out, err);
  if (*convert_cmd) return RunConvert(convert, out, err);
  if (*decode_cmd) return RunDecode(decode, out, err);
  if (*evaluate_cmd) return RunEvaluate(evaluate, evaluate_decode, out, err);
  if (*validate_cmd) return RunValidate(validate, out, err);
  return kExitUsage;
}

}  // namespace biodenoise
