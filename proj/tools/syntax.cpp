#include "syntax.hpp"

#include <cctype>
#include <charconv>

namespace bicyclic::cli {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

Int parse_nonnegative(std::string_view tok, std::string_view whole) {
  if (!tok.empty() && tok.front() == '-') {
    throw ParseError("negative value in '" + std::string(whole) + "'");
  }
  Int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec == std::errc::invalid_argument || ptr != tok.data() + tok.size()) {
    throw ParseError("expected an integer in '" + std::string(whole) + "'");
  }
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("integer out of range in '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Elem parse_elem(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("element must look like (i,j,b): '" + std::string(text) + "'");
  }
  const auto parts = split(std::string_view(s).substr(1, s.size() - 2), ',');
  if (parts.size() != 3) {
    throw ParseError("element must have three components: '" + std::string(text) + "'");
  }
  return Elem(parse_nonnegative(parts[0], text), parse_nonnegative(parts[1], text),
              parse_nonnegative(parts[2], text));
}

std::vector<Elem> parse_elem_list(std::string_view text) {
  const std::string s = strip_spaces(text);
  std::vector<Elem> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw ParseError("expected '(' in element list '" + std::string(text) + "'");
    const std::size_t close = s.find(')', pos);
    if (close == std::string::npos) {
      throw ParseError("unterminated element in '" + std::string(text) + "'");
    }
    out.push_back(parse_elem(std::string_view(s).substr(pos, close - pos + 1)));
    pos = close + 1;
  }
  return out;
}

InjEndo parse_endo(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() < 2 || (s[0] != 'a' && s[0] != 'b') || s[1] != ':') {
    throw ParseError("endomorphism must look like a:k,p or b:k,p: '" + std::string(text) + "'");
  }
  const auto parts = split(std::string_view(s).substr(2), ',');
  if (parts.size() != 2) {
    throw ParseError("endomorphism needs two parameters: '" + std::string(text) + "'");
  }
  const Int k = parse_nonnegative(parts[0], text);
  const Int p = parse_nonnegative(parts[1], text);
  return s[0] == 'a' ? make_alpha(k, p) : make_beta(k, p);
}

Family parse_family(std::string_view text) {
  const std::string s = strip_spaces(text);
  std::vector<Int> bases;
  for (std::string_view tok : split(s, ',')) {
    if (tok == "empty" || tok == "\xE2\x88\x85") {
      throw FamilyError("families containing the empty set are not supported");
    }
    bases.push_back(parse_nonnegative(tok, text));
  }
  return Family(std::move(bases));
}

}  // namespace bicyclic::cli
