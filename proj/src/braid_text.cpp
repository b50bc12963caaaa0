#include "scknot/braid_text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <variant>
#include <vector>

namespace scknot {

namespace {

struct Token {
  std::variant<Letter, AGenerator> value;
};

int parse_int(std::string_view text, std::size_t& i, std::size_t base, bool allow_minus) {
  const std::size_t start = i;
  if (allow_minus && i < text.size() && text[i] == '-') ++i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
  if (ec != std::errc() || ptr != text.data() + i) throw ParseError("expected integer", base + start);
  return value;
}

void expect(std::string_view text, std::size_t& i, char c, std::size_t base) {
  if (i >= text.size() || text[i] != c) {
    throw ParseError(std::string("expected '") + c + "'", base + i);
  }
  ++i;
}

Token parse_token(std::string_view tok, std::size_t base) {
  std::size_t i = 0;
  if (tok[0] == 's') {
    ++i;
    const int k = parse_int(tok, i, base, false);
    if (k < 1) throw ParseError("generator index must be >= 1", base + 1);
    int sign = 1;
    if (i < tok.size()) {
      if (tok.substr(i) != "^-1") throw ParseError("expected '^-1'", base + i);
      sign = -1;
      i = tok.size();
    }
    return {Letter{k, sign}};
  }
  if (tok[0] == 'A') {
    ++i;
    expect(tok, i, '(', base);
    const int a = parse_int(tok, i, base, false);
    expect(tok, i, ',', base);
    const int b = parse_int(tok, i, base, false);
    expect(tok, i, ')', base);
    int e = 1;
    if (i < tok.size()) {
      expect(tok, i, '^', base);
      const std::size_t at = i;
      e = parse_int(tok, i, base, true);
      if (e == 0) throw ParseError("exponent must be nonzero", base + at);
    }
    if (i != tok.size()) throw ParseError("trailing characters", base + i);
    if (a < 1 || b < 1 || a == b) throw ParseError("A(i,j) needs distinct indices >= 1", base);
    return {AGenerator(a, b, e)};
  }
  throw ParseError("unknown token '" + std::string(tok) + "'", base);
}

}  // namespace

ParsedWord parse_braid_word(std::string_view text, std::optional<int> strands) {
  std::vector<Token> tokens;
  int needed = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    Token t = parse_token(text.substr(start, i - start), start);
    if (const auto* l = std::get_if<Letter>(&t.value)) {
      needed = std::max(needed, l->pos + 1);
    } else {
      needed = std::max(needed, std::get<AGenerator>(t.value).j);
    }
    tokens.push_back(t);
  }

  ParsedWord out;
  out.inferred_strands = !strands.has_value();
  const int n = strands.value_or(needed);
  if (n < 1) throw DomainError("strand count must be positive");
  std::vector<Letter> letters;
  for (const Token& t : tokens) {
    if (const auto* l = std::get_if<Letter>(&t.value)) {
      letters.push_back(*l);
    } else {
      const PureBraid a = expand_A_generator(std::get<AGenerator>(t.value), n);
      letters.insert(letters.end(), a.word().letters().begin(), a.word().letters().end());
    }
  }
  out.word = SigmaWord(n, std::move(letters));
  return out;
}

}  // namespace scknot
