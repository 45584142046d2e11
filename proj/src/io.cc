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

#include "cpg/io.h"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <utility>

#include "cpg/errors.h"

namespace cpg {
namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

// Splits text into lines, dropping blank and '#' lines and remembering the
// 1-based source line of each survivor.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t number = 0;
    while (!text.empty()) {
      ++number;
      const std::size_t end = text.find('\n');
      std::string_view line = text.substr(0, end);
      text = end == std::string_view::npos ? std::string_view()
                                           : text.substr(end + 1);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (Trim(line).empty() || line.front() == '#') continue;
      lines_.push_back({line, number, 1});
    }
    last_line_ = number;
  }

  bool done() const { return next_ >= lines_.size(); }
  const Token& Next() { return lines_[next_++]; }
  std::size_t last_line() const { return last_line_; }

  // Remaining content split on whitespace.
  std::vector<Token> RestTokens() {
    std::vector<Token> tokens;
    for (; next_ < lines_.size(); ++next_) {
      const Token& line = lines_[next_];
      std::size_t i = 0;
      while (i < line.text.size()) {
        while (i < line.text.size() && IsSpace(line.text[i])) ++i;
        const std::size_t start = i;
        while (i < line.text.size() && !IsSpace(line.text[i])) ++i;
        if (i > start) {
          tokens.push_back(
              {line.text.substr(start, i - start), line.line, start + 1});
        }
      }
    }
    return tokens;
  }

 private:
  std::vector<Token> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 0;
};

void ExpectMagic(LineReader& reader, std::string_view magic) {
  if (reader.done()) {
    throw Error(ErrorCode::kBadMagic,
                "missing \"" + std::string(magic) + "\" header", 1);
  }
  const Token& line = reader.Next();
  if (Trim(line.text) != magic) {
    throw Error(ErrorCode::kBadMagic,
                "line " + std::to_string(line.line) + ": expected \"" +
                    std::string(magic) + "\", got \"" +
                    std::string(Trim(line.text)) + "\"",
                line.line, 1);
  }
}

int ReadPlayerCount(LineReader& reader) {
  if (reader.done()) {
    throw Error(ErrorCode::kCountMismatch, "missing player count",
                reader.last_line() + 1);
  }
  const Token& line = reader.Next();
  const std::string_view text = Trim(line.text);
  Integer n;
  if (!TryParseInteger(text, &n)) {
    throw Error(ErrorCode::kNotAnInteger,
                "line " + std::to_string(line.line) +
                    ": player count is not an integer: \"" +
                    std::string(text) + "\"",
                line.line, 1);
  }
  if (n < 1) {
    throw Error(ErrorCode::kEmptyGame,
                "line " + std::to_string(line.line) +
                    ": a game needs at least one player",
                line.line, 1);
  }
  if (!n.fits_sint_p() || n > 100'000'000) {
    throw Error(ErrorCode::kCountMismatch,
                "line " + std::to_string(line.line) + ": player count " +
                    ToString(n) + " is too large",
                line.line, 1);
  }
  return static_cast<int>(n.get_si());
}

std::string Where(const Token& token) {
  return "line " + std::to_string(token.line) + ", column " +
         std::to_string(token.column);
}

std::vector<std::string_view> SplitOn(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

std::vector<PlayerId> ParseIndexList(std::string_view list, int n) {
  std::vector<PlayerId> ids;
  if (Trim(list).empty()) return ids;
  for (std::string_view part : SplitOn(list, ',')) {
    part = Trim(part);
    Integer index;
    if (!TryParseInteger(part, &index)) {
      throw Error(ErrorCode::kNotAnInteger,
                  "player index is not an integer: \"" + std::string(part) +
                      "\"");
    }
    if (index < 1 || index > n) {
      throw Error(ErrorCode::kInvalidPlayer,
                  "invalid player " + ToString(index) + " (game has " +
                      std::to_string(n) + " players)");
    }
    ids.emplace_back(static_cast<int>(index.get_si()));
  }
  return ids;
}

}  // namespace

CpGame ParseGame(std::string_view text) {
  LineReader reader(text);
  ExpectMagic(reader, "cpg 1");
  const int n = ReadPlayerCount(reader);
  std::vector<Integer> weights;
  weights.reserve(n);
  const std::vector<Token> tokens = reader.RestTokens();
  for (const Token& token : tokens) {
    Integer w;
    if (!TryParseInteger(token.text, &w)) {
      throw Error(ErrorCode::kNotAnInteger,
                  Where(token) + ": weight is not an integer: \"" +
                      std::string(token.text) + "\"",
                  token.line, token.column);
    }
    if (w < 2) throw InvalidWeightError(token.line, ToString(w), token.column);
    weights.push_back(std::move(w));
  }
  if (static_cast<int>(weights.size()) != n) {
    throw Error(ErrorCode::kCountMismatch,
                "declared " + std::to_string(n) + " players but found " +
                    std::to_string(weights.size()) + " weights",
                reader.last_line());
  }
  return CpGame::Create(std::move(weights));
}

std::string RenderGame(const CpGame& game) {
  std::string out = "cpg 1\n" + std::to_string(game.num_players()) + "\n";
  bool first = true;
  for (const Integer& w : game.weights()) {
    if (!first) out += ' ';
    out += ToString(w);
    first = false;
  }
  out += '\n';
  return out;
}

TableGame ParseTable(std::string_view text) {
  LineReader reader(text);
  ExpectMagic(reader, "tug 1");
  const int n = ReadPlayerCount(reader);
  if (n > kMaxMaskPlayers) {
    throw Error(ErrorCode::kBadTable,
                "tables support at most " + std::to_string(kMaxMaskPlayers) +
                    " players, got " + std::to_string(n));
  }
  const Mask count = Mask{1} << n;
  std::vector<std::pair<Mask, Rational>> entries;
  std::vector<std::size_t> entry_lines;
  while (!reader.done()) {
    const Token& line = reader.Next();
    LineReader single(line.text);
    std::vector<Token> parts = single.RestTokens();
    for (Token& part : parts) part.line = line.line;
    if (parts.size() != 2) {
      throw Error(ErrorCode::kBadTable,
                  "line " + std::to_string(line.line) +
                      ": expected \"MASK VALUE\"",
                  line.line, 1);
    }
    Integer mask;
    if (!TryParseInteger(parts[0].text, &mask)) {
      throw Error(ErrorCode::kNotAnInteger,
                  Where(parts[0]) + ": mask is not an integer", line.line,
                  parts[0].column);
    }
    if (mask < 0 || mask >= Integer(static_cast<unsigned long>(count))) {
      throw Error(ErrorCode::kBadTable,
                  Where(parts[0]) + ": mask " + ToString(mask) +
                      " out of range for " + std::to_string(n) + " players",
                  line.line, parts[0].column);
    }
    Rational value;
    if (!TryParseRational(parts[1].text, &value)) {
      throw Error(ErrorCode::kBadRational,
                  Where(parts[1]) + ": not a rational: \"" +
                      std::string(parts[1].text) + "\"",
                  line.line, parts[1].column);
    }
    entries.emplace_back(mask.get_ui(), std::move(value));
    entry_lines.push_back(line.line);
  }

  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return entries[a].first < entries[b].first;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (entries[order[i]].first == entries[order[i - 1]].first) {
      const std::size_t line = entry_lines[order[i]];
      throw Error(ErrorCode::kBadTable,
                  "line " + std::to_string(line) + ": mask " +
                      std::to_string(entries[order[i]].first) + " given twice",
                  line, 1);
    }
  }
  if (entries.size() != count) {
    throw Error(ErrorCode::kCountMismatch,
                "table for " + std::to_string(n) + " players needs " +
                    std::to_string(count) + " entries, found " +
                    std::to_string(entries.size()),
                reader.last_line());
  }
  std::vector<Rational> values;
  values.reserve(count);
  for (std::size_t i : order) values.push_back(std::move(entries[i].second));
  return TableGame::Create(n, std::move(values));
}

std::string RenderTable(const TableGame& table) {
  std::string out = "tug 1\n" + std::to_string(table.num_players()) + "\n";
  const auto& values = table.values();
  for (Mask m = 0; m < values.size(); ++m) {
    out += std::to_string(m) + ' ' + ToString(values[m]) + '\n';
  }
  return out;
}

FileKind DetectFileKind(std::string_view text) {
  LineReader reader(text);
  if (!reader.done()) {
    const std::string_view magic = Trim(reader.Next().text);
    if (magic == "cpg 1") return FileKind::kGame;
    if (magic == "tug 1") return FileKind::kTable;
  }
  throw Error(ErrorCode::kBadMagic,
              "expected a \"cpg 1\" game or \"tug 1\" table file", 1);
}

std::vector<Rational> ParseRationals(std::string_view text) {
  std::vector<Rational> values;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i == start) break;
    const std::string_view token = text.substr(start, i - start);
    Rational value;
    if (!TryParseRational(token, &value)) {
      throw Error(ErrorCode::kBadRational,
                  "not a rational: \"" + std::string(token) + "\"");
    }
    values.push_back(std::move(value));
  }
  return values;
}

Imputation ParseImputation(std::string_view text, const CpGame& game) {
  std::vector<Rational> payoffs = ParseRationals(text);
  if (static_cast<int>(payoffs.size()) != game.num_players()) {
    throw Error(ErrorCode::kCountMismatch,
                "expected " + std::to_string(game.num_players()) +
                    " payoffs, found " + std::to_string(payoffs.size()));
  }
  return Imputation::ForGame(game, std::move(payoffs));
}

Coalition ParseCoalition(std::string_view list, int n) {
  return Coalition(ParseIndexList(list, n));
}

Permutation ParsePermutation(std::string_view list, int n) {
  std::vector<PlayerId> order = ParseIndexList(list, n);
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kInvalidPermutation,
                "permutation lists " + std::to_string(order.size()) +
                    " players, expected " + std::to_string(n));
  }
  return Permutation(std::move(order));
}

std::vector<MixtureTerm> ParseMixture(std::string_view text, int n) {
  std::vector<MixtureTerm> terms;
  for (std::string_view part : SplitOn(text, ';')) {
    part = Trim(part);
    if (part.empty()) continue;
    const std::size_t at = part.find('@');
    if (at == std::string_view::npos) {
      throw Error(ErrorCode::kBadMixture,
                  "mixture term \"" + std::string(part) +
                      "\" is not of the form PERM@COEF");
    }
    Rational coefficient;
    const std::string_view coef_text = Trim(part.substr(at + 1));
    if (!TryParseRational(coef_text, &coefficient)) {
      throw Error(ErrorCode::kBadRational,
                  "not a rational: \"" + std::string(coef_text) + "\"");
    }
    terms.push_back(
        {ParsePermutation(part.substr(0, at), n), std::move(coefficient)});
  }
  return terms;
}

std::string FormatCoalition(const Coalition& coalition) {
  if (coalition.empty()) return "∅";
  std::string out = "{";
  bool first = true;
  for (PlayerId p : coalition.members()) {
    if (!first) out += ',';
    out += std::to_string(p.index());
    first = false;
  }
  out += '}';
  return out;
}

std::string FormatRationals(std::span<const Rational> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += ToString(values[i]);
  }
  return out;
}

}  // namespace cpg
