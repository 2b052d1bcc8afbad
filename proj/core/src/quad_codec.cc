// Copyright 2026 The nsq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nsq/quad_codec.h"

#include <cctype>
#include <stdexcept>
#include <string>

namespace nsq {
namespace {

std::invalid_argument CodeError(const std::string& what) {
  return std::invalid_argument("quad code: " + what);
}

QuadCode ParseDigits(std::string_view digits, QuadKind kind, int n) {
  const int m = n / 2;
  const bool odd = (n % 2) == 1;
  if (static_cast<int>(digits.size()) != m + (odd ? 1 : 0)) {
    throw CodeError("\"" + std::string(digits) + "\" has wrong length for n=" +
                    std::to_string(n));
  }
  QuadCode code;
  code.kind = kind;
  for (int i = 0; i < m; ++i) {
    const int label = digits[i] - '0';
    if (label < 1 || label > 8) {
      throw CodeError("'" + std::string(1, digits[i]) +
                      "' is not a quad symbol in \"" + std::string(digits) +
                      "\"");
    }
    code.quads.emplace_back(label);
  }
  if (odd) {
    const int label = digits[m] - '0';
    if (label < 0 || label > 3) {
      throw CodeError("'" + std::string(1, digits[m]) +
                      "' is not a central symbol in \"" +
                      std::string(digits) + "\"");
    }
    code.central.emplace(label);
  }
  ValidateCode(code, n);
  return code;
}

std::pair<std::string_view, std::string_view> SplitCodeText(
    std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = trim(text);
  const auto space = text.find(' ');
  if (space == std::string_view::npos) {
    throw CodeError("expected \"<pcode> <qcode>\", got \"" +
                    std::string(text) + "\"");
  }
  const std::string_view p = trim(text.substr(0, space));
  const std::string_view q = trim(text.substr(space + 1));
  for (const std::string_view part : {p, q}) {
    if (part.empty()) throw CodeError("empty code in \"" + std::string(text) + "\"");
    for (const char ch : part) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw CodeError("non-digit '" + std::string(1, ch) + "' in \"" +
                        std::string(text) + "\"");
      }
    }
  }
  if (p.size() != q.size()) {
    throw CodeError("p-code and q-code lengths differ in \"" +
                    std::string(text) + "\"");
  }
  return {p, q};
}

}  // namespace

std::string QuadCode::ToString() const {
  std::string out;
  out.reserve(quads.size() + 1);
  for (const QuadSymbol q : quads) out.push_back(static_cast<char>('0' + q.label()));
  if (central) out.push_back(static_cast<char>('0' + central->label()));
  return out;
}

SymmetryType Symmetry(QuadSymbol q) { return q.symmetry(); }

QuadCode DecomposePair(const BinarySeq& x, const BinarySeq& y, QuadKind kind) {
  const int n = x.size();
  if (y.size() != n) throw CodeError("pair length mismatch");
  if (kind == QuadKind::kAA && x != y) {
    throw CodeError("AA-code requires identical rows");
  }
  const int m = n / 2;
  QuadCode code;
  code.kind = kind;
  code.quads.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int j = n - 1 - i;
    const QuadPattern pattern = static_cast<QuadPattern>(
        (x[i] < 0 ? 1 : 0) | (x[j] < 0 ? 2 : 0) | (y[i] < 0 ? 4 : 0) |
        (y[j] < 0 ? 8 : 0));
    const auto symbol = QuadSymbol::FromPattern(pattern);
    if (!symbol) {
      throw CodeError("quad " + std::to_string(i + 1) +
                      " is not a BS-quad (row products differ)");
    }
    code.quads.push_back(*symbol);
  }
  if (n % 2 == 1) {
    code.central = CentralSymbol::FromPattern(
        static_cast<std::uint8_t>((x[m] < 0 ? 1 : 0) | (y[m] < 0 ? 2 : 0)));
  }
  return code;
}

void ValidateCode(const QuadCode& code, int n) {
  if (n < 1) throw CodeError("n must be >= 1");
  if (static_cast<int>(code.quads.size()) != n / 2) {
    throw CodeError("expected " + std::to_string(n / 2) + " quads for n=" +
                    std::to_string(n) + ", got " +
                    std::to_string(code.quads.size()));
  }
  if (code.central.has_value() != (n % 2 == 1)) {
    throw CodeError(n % 2 == 1 ? "odd n needs a central symbol"
                               : "even n takes no central symbol");
  }
  if (code.kind == QuadKind::kAA) {
    for (std::size_t i = 0; i < code.quads.size(); ++i) {
      if (!code.quads[i].IsAA()) {
        throw CodeError("AA-code quad " + std::to_string(i + 1) + " is " +
                        std::to_string(code.quads[i].label()) +
                        ", not one of 1,3,6,8");
      }
    }
    if (code.central && !code.central->IsAA()) {
      throw CodeError("AA-code central symbol must be 0 or 3");
    }
  }
}

std::pair<BinarySeq, BinarySeq> ComposePair(const QuadCode& code, int n) {
  ValidateCode(code, n);
  std::vector<std::int8_t> x(static_cast<std::size_t>(n));
  std::vector<std::int8_t> y(static_cast<std::size_t>(n));
  auto sign = [](int bit) -> std::int8_t { return bit ? -1 : 1; };
  const int m = n / 2;
  for (int i = 0; i < m; ++i) {
    const int j = n - 1 - i;
    const QuadPattern p = code.quads[i].pattern();
    x[i] = sign(p & 1);
    x[j] = sign(p & 2);
    y[i] = sign(p & 4);
    y[j] = sign(p & 8);
  }
  if (code.central) {
    const std::uint8_t p = code.central->pattern();
    x[m] = sign(p & 1);
    y[m] = sign(p & 2);
  }
  return {BinarySeq(std::move(x)), BinarySeq(std::move(y))};
}

std::pair<QuadCode, QuadCode> ParseCode(std::string_view text, int n) {
  const auto [p, q] = SplitCodeText(text);
  return {ParseDigits(p, QuadKind::kAA, n), ParseDigits(q, QuadKind::kCD, n)};
}

std::pair<QuadCode, QuadCode> ParseCode(std::string_view text) {
  const auto [p, q] = SplitCodeText(text);
  const int len = static_cast<int>(p.size());
  std::vector<std::pair<QuadCode, QuadCode>> wellformed;
  std::string last_error;
  for (const int n : {2 * len, 2 * len - 1}) {
    if (n < 1) continue;
    try {
      wellformed.emplace_back(ParseDigits(p, QuadKind::kAA, n),
                              ParseDigits(q, QuadKind::kCD, n));
    } catch (const std::invalid_argument& e) {
      last_error = e.what();
    }
  }
  if (wellformed.empty()) throw std::invalid_argument(last_error);
  if (wellformed.size() == 1) return wellformed.front();
  std::vector<std::pair<QuadCode, QuadCode>> normal;
  for (auto& candidate : wellformed) {
    if (DecodeQuadruple(candidate.first, candidate.second).valid()) {
      normal.push_back(candidate);
    }
  }
  if (normal.size() == 1) return normal.front();
  throw CodeError("length of \"" + std::string(text) +
                  "\" is ambiguous; pass n explicitly");
}

std::string FormatCode(const QuadCode& p, const QuadCode& q) {
  return p.ToString() + " " + q.ToString();
}

NormalQuadruple DecodeQuadruple(const QuadCode& p, const QuadCode& q) {
  if (p.kind != QuadKind::kAA || q.kind != QuadKind::kCD) {
    throw CodeError("expected an AA-code followed by a CD-code");
  }
  const int n = p.n();
  if (q.n() != n) throw CodeError("p-code and q-code describe different n");
  auto [a, a2] = ComposePair(p, n);
  auto [c, d] = ComposePair(q, n);
  return NormalQuadruple(std::move(a), std::move(c), std::move(d));
}

std::pair<QuadCode, QuadCode> EncodeQuadruple(const NormalQuadruple& s) {
  return {DecomposePair(s.a(), s.a(), QuadKind::kAA),
          DecomposePair(s.c(), s.d(), QuadKind::kCD)};
}

}  // namespace nsq
