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


#include "biodenoise/qa_metrics.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <functional>
#include <set>

#include "absl/status/status.h"
#include "biodenoise/text_util.h"

namespace biodenoise {
namespace {

std::string NfkcCasefold(std::string_view text) {
  UErrorCode error = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer =
      icu::Normalizer2::getNFKCCasefoldInstance(error);
  if (U_FAILURE(error)) return FoldCase(text);
  const icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  const icu::UnicodeString folded = normalizer->normalize(source, error);
  if (U_FAILURE(error)) return FoldCase(text);
  std::string out;
  folded.toUTF8String(out);
  return out;
}

bool IsArticle(std::u32string_view word) {
  return word == U"a" || word == U"an" || word == U"the";
}

std::string NormalizeOnce(std::string_view text) {
  const std::u32string chars = ToUtf32(NfkcCasefold(text));
  std::vector<std::u32string> words;
  std::u32string current;
  for (char32_t c : chars) {
    if (u_isUWhiteSpace(static_cast<UChar32>(c))) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));

  std::u32string joined;
  size_t first = 0;
  if (words.size() > 1 && IsArticle(words[0])) first = 1;
  for (size_t i = first; i < words.size(); ++i) {
    if (i > first) joined.push_back(U' ');
    joined += words[i];
  }
  size_t begin = 0;
  size_t end = joined.size();
  auto outer = [](char32_t c) {
    return u_ispunct(static_cast<UChar32>(c)) || c == U' ';
  };
  while (begin < end && outer(joined[begin])) ++begin;
  while (end > begin && outer(joined[end - 1])) --end;
  return ToUtf8(std::u32string_view(joined).substr(begin, end - begin));
}

double SafeDiv(double num, double den) { return den == 0 ? 0.0 : num / den; }

double F1(double p, double r) { return p + r == 0 ? 0.0 : 2 * p * r / (p + r); }

}  // namespace

std::string NormalizeAnswer(std::string_view text) {
  std::string current = NormalizeOnce(text);
  // Stripping can expose another article or punctuation run ("(the p53)").
  for (int i = 0; i < 16; ++i) {
    std::string next = NormalizeOnce(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::optional<size_t> FirstMatchRank(const AnswerVariants& gold,
                                     std::span<const std::string> predictions,
                                     size_t window) {
  std::set<std::string> accepted;
  for (const std::string& v : gold) accepted.insert(NormalizeAnswer(v));
  const size_t limit = std::min(window, predictions.size());
  for (size_t i = 0; i < limit; ++i) {
    if (accepted.contains(NormalizeAnswer(predictions[i]))) return i + 1;
  }
  return std::nullopt;
}

FactoidScores FactoidMetrics(std::span<const std::optional<size_t>> ranks,
                             size_t window) {
  FactoidScores out;
  out.n = ranks.size();
  if (ranks.empty()) return out;
  double strict = 0, lenient = 0, reciprocal = 0;
  for (const std::optional<size_t>& rank : ranks) {
    if (!rank || *rank == 0 || *rank > window) continue;
    if (*rank == 1) strict += 1;
    lenient += 1;
    reciprocal += 1.0 / static_cast<double>(*rank);
  }
  const double n = static_cast<double>(ranks.size());
  out.sacc = strict / n;
  out.lacc = lenient / n;
  out.mrr = reciprocal / n;
  return out;
}

ListQuestionScore ScoreListQuestion(std::span<const AnswerVariants> gold,
                                    std::span<const std::string> predictions) {
  std::vector<std::string> preds;
  std::set<std::string> seen;
  for (const std::string& p : predictions) {
    std::string norm = NormalizeAnswer(p);
    if (seen.insert(norm).second) preds.push_back(std::move(norm));
  }
  std::vector<std::set<std::string>> items;
  for (const AnswerVariants& item : gold) {
    std::set<std::string> variants;
    for (const std::string& v : item) variants.insert(NormalizeAnswer(v));
    items.push_back(std::move(variants));
  }

  // Kuhn's augmenting paths; sizes are small.
  std::vector<int> gold_owner(items.size(), -1);
  std::function<bool(size_t, std::vector<bool>&)> augment =
      [&](size_t p, std::vector<bool>& visited) {
        for (size_t g = 0; g < items.size(); ++g) {
          if (visited[g] || !items[g].contains(preds[p])) continue;
          visited[g] = true;
          if (gold_owner[g] < 0 ||
              augment(static_cast<size_t>(gold_owner[g]), visited)) {
            gold_owner[g] = static_cast<int>(p);
            return true;
          }
        }
        return false;
      };
  size_t matched = 0;
  for (size_t p = 0; p < preds.size(); ++p) {
    std::vector<bool> visited(items.size(), false);
    if (augment(p, visited)) ++matched;
  }

  ListQuestionScore out;
  out.matched = matched;
  out.predicted = preds.size();
  out.gold = items.size();
  out.precision = SafeDiv(static_cast<double>(matched), static_cast<double>(preds.size()));
  out.recall = SafeDiv(static_cast<double>(matched), static_cast<double>(items.size()));
  out.f1 = F1(out.precision, out.recall);
  return out;
}

ListScores ListMetrics(std::span<const ListQuestionScore> questions) {
  ListScores out;
  out.n = questions.size();
  if (questions.empty()) return out;
  for (const ListQuestionScore& q : questions) {
    out.macro_precision += q.precision;
    out.macro_recall += q.recall;
    out.macro_f1 += q.f1;
  }
  const double n = static_cast<double>(questions.size());
  out.macro_precision /= n;
  out.macro_recall /= n;
  out.macro_f1 /= n;
  return out;
}

absl::StatusOr<YesNoScores> YesNoMetrics(std::span<const YesNo> gold,
                                         std::span<const YesNo> predicted) {
  if (gold.size() != predicted.size()) {
    return absl::InvalidArgumentError("gold and predicted label counts differ");
  }
  YesNoScores out;
  out.n = gold.size();
  if (gold.empty()) return out;
  size_t correct = 0;
  auto class_f1 = [&](YesNo positive) {
    double tp = 0, fp = 0, fn = 0;
    for (size_t i = 0; i < gold.size(); ++i) {
      const bool g = gold[i] == positive;
      const bool p = predicted[i] == positive;
      tp += g && p;
      fp += !g && p;
      fn += g && !p;
    }
    return SafeDiv(2 * tp, 2 * tp + fp + fn);
  };
  for (size_t i = 0; i < gold.size(); ++i) correct += gold[i] == predicted[i];
  out.acc = static_cast<double>(correct) / static_cast<double>(gold.size());
  out.f1_yes = class_f1(YesNo::kYes);
  out.f1_no = class_f1(YesNo::kNo);
  out.f1 = (out.f1_yes + out.f1_no) / 2;
  for (YesNo label : {YesNo::kYes, YesNo::kNo}) {
    if (std::find(gold.begin(), gold.end(), label) == gold.end()) {
      out.absent_classes.emplace_back(YesNoName(label));
    }
  }
  return out;
}

}  // namespace biodenoise
