// Copyright 2026 The CPG Authors
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

#include "cpg/cli.h"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <utility>
#include <variant>

#include "CLI11.hpp"
#include "cpg/errors.h"
#include "cpg/io.h"
#include "cpg/solutions.h"
#include "cpg/verify.h"
#include "json.hpp"

namespace cpg::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "plain";
  std::string input_path;
  std::string coalition;
  std::string permutation;
  std::optional<std::string> imputation_path;
  std::optional<std::string> imputation_inline;
  std::string mix;
  std::string properties = "monotone,superadditive,convex,dummies";
  std::optional<int> limit;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kUsage, "cannot read file: " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int ParseLimit(const std::string& text, const char* source) {
  Integer value;
  if (!TryParseInteger(text, &value) || value < 0 || !value.fits_sint_p()) {
    throw Error(ErrorCode::kUsage, std::string(source) +
                                       " must be a non-negative integer, got \"" +
                                       text + "\"");
  }
  return static_cast<int>(value.get_si());
}

Limits ResolveLimits(const Options& options, const Environment& env) {
  Limits limits;
  if (env.cpg_limit) limits = Limits::Uniform(ParseLimit(*env.cpg_limit, "CPG_LIMIT"));
  if (options.limit) {
    if (*options.limit < 0) {
      throw Error(ErrorCode::kUsage, "--limit must be non-negative");
    }
    limits = Limits::Uniform(*options.limit);
  }
  return limits;
}

Json StringArray(std::span<const Rational> values) {
  Json array = Json::array();
  for (const Rational& v : values) array.push_back(ToString(v));
  return array;
}

Json CoalitionJson(const Coalition& coalition) {
  Json array = Json::array();
  for (PlayerId p : coalition.members()) array.push_back(p.index());
  return array;
}

Json PermutationJson(const Permutation& permutation) {
  Json array = Json::array();
  for (PlayerId p : permutation.order()) array.push_back(p.index());
  return array;
}

Json Header(const std::string& command, const CpGame& game) {
  Json j;
  j["command"] = command;
  j["n"] = game.num_players();
  Json weights = Json::array();
  for (const Integer& w : game.weights()) weights.push_back(ToString(w));
  j["weights"] = std::move(weights);
  return j;
}

class Reporter {
 public:
  Reporter(const Options& options, std::ostream& out)
      : json_(options.format == "json"), out_(out) {}

  bool json() const { return json_; }

  void Emit(const std::string& plain, const Json& json) {
    if (json_) {
      out_ << json.dump() << '\n';
    } else {
      out_ << plain << '\n';
    }
  }

 private:
  bool json_;
  std::ostream& out_;
};

Imputation LoadImputation(const Options& options, const CpGame& game) {
  if (options.imputation_inline) {
    return ParseImputation(*options.imputation_inline, game);
  }
  if (options.imputation_path) {
    return ParseImputation(ReadFile(*options.imputation_path), game);
  }
  throw Error(ErrorCode::kUsage, "one of --imputation or --inline is required");
}

int RunValue(const Options& options, Reporter& reporter) {
  const CpGame game = ParseGame(ReadFile(options.input_path));
  const Coalition coalition = ParseCoalition(options.coalition, game.num_players());
  const Integer value = game.Value(coalition);
  Json j = Header("value", game);
  j["coalition"] = CoalitionJson(coalition);
  j["value"] = ToString(value);
  reporter.Emit(ToString(value), j);
  return kSuccess;
}

int RunImputation(const Options& options, Reporter& reporter) {
  const CpGame game = ParseGame(ReadFile(options.input_path));
  const Permutation permutation =
      options.permutation.empty()
          ? Permutation::Identity(game.num_players())
          : ParsePermutation(options.permutation, game.num_players());
  const Imputation imputation = MarginalVector(game, permutation);
  Json j = Header("imputation", game);
  j["permutation"] = PermutationJson(permutation);
  j["imputation"] = StringArray(imputation.payoffs());
  reporter.Emit(FormatRationals(imputation.payoffs()), j);
  return kSuccess;
}

int RunCoreCheck(const Options& options, const Limits& limits,
                 Reporter& reporter) {
  const CpGame game = ParseGame(ReadFile(options.input_path));
  const Imputation imputation = LoadImputation(options, game);
  const CoreVerdict verdict = CoreCheck(game, imputation, limits);
  Json j = Header("core-check", game);
  j["imputation"] = StringArray(imputation.payoffs());
  if (verdict.in_core()) {
    j["outcome"] = "in-core";
    reporter.Emit("in-core", j);
    return kSuccess;
  }
  const Blocked& blocked = *verdict.blocked;
  j["outcome"] = "blocked";
  j["witness"] = CoalitionJson(blocked.witness);
  j["excess"] = ToString(blocked.excess);
  reporter.Emit("blocked coalition=" + FormatCoalition(blocked.witness) +
                    " excess=" + ToString(blocked.excess),
                j);
  return kViolated;
}

int RunExcess(const Options& options, Reporter& reporter) {
  const CpGame game = ParseGame(ReadFile(options.input_path));
  const Imputation imputation = LoadImputation(options, game);
  const Coalition coalition = ParseCoalition(options.coalition, game.num_players());
  const Rational excess = Excess(game, imputation, coalition);
  Json j = Header("excess", game);
  j["imputation"] = StringArray(imputation.payoffs());
  j["coalition"] = CoalitionJson(coalition);
  j["excess"] = ToString(excess);
  j["blocks"] = sgn(excess) > 0;
  reporter.Emit(ToString(excess), j);
  return kSuccess;
}

int RunShapley(const Options& options, const Limits& limits,
               Reporter& reporter) {
  const CpGame game = ParseGame(ReadFile(options.input_path));
  const Imputation shapley = Shapley(game, limits);
  Json j = Header("shapley", game);
  j["values"] = StringArray(shapley.payoffs());
  reporter.Emit(FormatRationals(shapley.payoffs()), j);
  return kSuccess;
}

int RunBanzhaf(const Options& options, const Limits& limits,
               Reporter& reporter) {
  const CpGame game = ParseGame(ReadFile(options.input_path));
  const std::vector<Rational> banzhaf = Banzhaf(game, limits);
  Json j = Header("banzhaf", game);
  j["values"] = StringArray(banzhaf);
  reporter.Emit(FormatRationals(banzhaf), j);
  return kSuccess;
}

int RunWeber(const Options& options, Reporter& reporter) {
  const CpGame game = ParseGame(ReadFile(options.input_path));
  const std::vector<MixtureTerm> mixture =
      ParseMixture(options.mix, game.num_players());
  const Imputation mixed = WeberMix(game, mixture);
  Json j = Header("weber", game);
  Json terms = Json::array();
  for (const MixtureTerm& term : mixture) {
    Json t;
    t["permutation"] = PermutationJson(term.permutation);
    t["coefficient"] = ToString(term.coefficient);
    terms.push_back(std::move(t));
  }
  j["mix"] = std::move(terms);
  j["imputation"] = StringArray(mixed.payoffs());
  reporter.Emit(FormatRationals(mixed.payoffs()), j);
  return kSuccess;
}

std::vector<std::string> SplitProperties(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream stream(list);
  std::string name;
  while (std::getline(stream, name, ',')) {
    if (name != "monotone" && name != "superadditive" && name != "convex" &&
        name != "dummies") {
      throw Error(ErrorCode::kUsage,
                  "unknown property \"" + name +
                      "\" (expected monotone, superadditive, convex, dummies)");
    }
    names.push_back(name);
  }
  if (names.empty()) throw Error(ErrorCode::kUsage, "no properties given");
  return names;
}

int RunVerify(const Options& options, const Limits& limits,
              Reporter& reporter) {
  const std::vector<std::string> properties = SplitProperties(options.properties);
  const std::string text = ReadFile(options.input_path);
  const FileKind kind = DetectFileKind(text);

  std::optional<CpGame> game;
  std::optional<TableGame> table;
  std::unique_ptr<GameView> owned_view;
  const GameView* view = nullptr;
  Json j;
  if (kind == FileKind::kGame) {
    game = ParseGame(text);
    j = Header("verify", *game);
    j["kind"] = "game";
    owned_view = std::make_unique<CpGameView>(*game);
    view = owned_view.get();
  } else {
    table = ParseTable(text);
    j["command"] = "verify";
    j["n"] = table->num_players();
    j["kind"] = "table";
    view = &*table;
  }

  bool all_hold = true;
  std::string plain;
  Json results = Json::array();
  for (const std::string& name : properties) {
    Json r;
    r["property"] = name;
    std::string line = name + ": ";
    if (name == "dummies") {
      const std::vector<PlayerId> dummies = FindDummies(*view, limits);
      const bool holds = dummies.empty();
      r["holds"] = holds;
      Json ids = Json::array();
      for (PlayerId p : dummies) ids.push_back(p.index());
      r["dummies"] = std::move(ids);
      line += holds ? "pass" : "fail players=" + FormatCoalition(Coalition(dummies));
      all_hold = all_hold && holds;
    } else {
      CheckResult result;
      std::string first_label = "A=";
      std::string second_label = " B=";
      if (name == "monotone") {
        result = CheckMonotone(*view, limits);
        first_label = "C'=";
        second_label = " C=";
      } else if (name == "superadditive") {
        result = CheckSuperadditive(*view, limits);
      } else {
        result = CheckConvex(*view, limits);
      }
      r["holds"] = result.holds();
      if (result.holds()) {
        line += "pass";
      } else {
        r["witness"] = Json::array({CoalitionJson(result.witness->first),
                                    CoalitionJson(result.witness->second)});
        line += "fail " + first_label + FormatCoalition(result.witness->first) +
                second_label + FormatCoalition(result.witness->second);
        all_hold = false;
      }
    }
    results.push_back(std::move(r));
    if (!plain.empty()) plain += '\n';
    plain += line;
  }
  j["results"] = std::move(results);
  reporter.Emit(plain, j);
  return all_hold ? kSuccess : kViolated;
}

}  // namespace

Environment Environment::FromProcess() {
  Environment env;
  if (const char* limit = std::getenv("CPG_LIMIT")) env.cpg_limit = limit;
  return env;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Environment& env) {
  Options options;
  CLI::App app{"Exact solver for cooperative product games", "cpg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", options.format, "Output rendering")
      ->check(CLI::IsMember({"plain", "json"}));

  auto add_game = [&](CLI::App* sub, const char* what = "Game file (cpg 1)") {
    sub->add_option("game", options.input_path, what)->required();
  };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", options.limit,
                    "Player-count ceiling for brute-force enumeration");
  };
  auto add_imputation = [&](CLI::App* sub) {
    auto* file = sub->add_option("--imputation", options.imputation_path,
                                 "File with the payoff vector");
    auto* text = sub->add_option("--inline", options.imputation_inline,
                                 "Payoff vector given inline");
    file->excludes(text);
    text->excludes(file);
  };

  auto* value = app.add_subcommand("value", "Value of a coalition");
  add_game(value);
  value->add_option("--coalition", options.coalition,
                    "Comma-separated players; empty for the empty coalition")
      ->required()
      ->expected(0, 1);

  auto* imputation = app.add_subcommand("imputation",
                                        "Marginal vector of a permutation");
  add_game(imputation);
  imputation->add_option("--permutation", options.permutation,
                         "Comma-separated ordering (default identity)");

  auto* core = app.add_subcommand("core-check", "Exhaustive core membership");
  add_game(core);
  add_imputation(core);
  add_limit(core);

  auto* excess = app.add_subcommand("excess", "Excess of a coalition");
  add_game(excess);
  add_imputation(excess);
  excess->add_option("--coalition", options.coalition,
                     "Comma-separated players; empty for the empty coalition")
      ->required()
      ->expected(0, 1);

  auto* shapley = app.add_subcommand("shapley", "Exact Shapley value");
  add_game(shapley);
  add_limit(shapley);

  auto* banzhaf = app.add_subcommand("banzhaf", "Exact raw Banzhaf values");
  add_game(banzhaf);
  add_limit(banzhaf);

  auto* weber = app.add_subcommand("weber", "Convex mix of marginal vectors");
  add_game(weber);
  weber->add_option("--mix", options.mix, "PERM@COEF;PERM@COEF;...")->required();

  auto* verify = app.add_subcommand("verify", "Brute-force property oracles");
  add_game(verify, "Game file (cpg 1) or table file (tug 1)");
  verify->add_option("--properties", options.properties,
                     "Comma-separated: monotone,superadditive,convex,dummies");
  add_limit(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "cpg: error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const Limits limits = ResolveLimits(options, env);
    Reporter reporter(options, out);
    if (value->parsed()) return RunValue(options, reporter);
    if (imputation->parsed()) return RunImputation(options, reporter);
    if (core->parsed()) return RunCoreCheck(options, limits, reporter);
    if (excess->parsed()) return RunExcess(options, reporter);
    if (shapley->parsed()) return RunShapley(options, limits, reporter);
    if (banzhaf->parsed()) return RunBanzhaf(options, limits, reporter);
    if (weber->parsed()) return RunWeber(options, reporter);
    if (verify->parsed()) return RunVerify(options, limits, reporter);
  } catch (const LimitExceededError& e) {
    err << "cpg: limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const Error& e) {
    err << "cpg: error: " << ErrorCodeName(e.code()) << ": " << e.what()
        << '\n';
    return kUsageError;
  }
  err << "cpg: error: no subcommand\n";
  return kUsageError;
}

}  // namespace cpg::cli
