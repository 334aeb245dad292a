#include "wikivote/text.hpp"

#include <cctype>
#include <charconv>

namespace wikivote {

namespace {

inline unsigned char uc(char c) { return static_cast<unsigned char>(c); }
inline bool is_word_char(char c) { return std::isalnum(uc(c)) != 0; }

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(uc(c)));
  return out;
}

std::string normalize_surface(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (std::isspace(uc(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(uc(c))));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(uc(text[i]))) ++i;
    std::size_t j = i;
    while (j < n && !std::isspace(uc(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    std::size_t b = 0;
    std::size_t e = tok.size();
    while (b < e && std::ispunct(uc(tok[b]))) ++b;
    while (e > b && std::ispunct(uc(tok[e - 1]))) --e;
    if (e > b) out.emplace_back(tok.substr(b, e - b));
    i = j;
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(s.substr(start));
      return fields;
    }
    fields.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::size_t find_term(std::string_view hay, std::string_view term) {
  if (term.empty() || term.size() > hay.size()) return std::string_view::npos;
  std::size_t pos = 0;
  while ((pos = hay.find(term, pos)) != std::string_view::npos) {
    const std::size_t end = pos + term.size();
    const bool left_ok = pos == 0 || !is_word_char(hay[pos - 1]);
    const bool right_ok = end == hay.size() || !is_word_char(hay[end]);
    if (left_ok && right_ok) return pos;
    ++pos;
  }
  return std::string_view::npos;
}

bool contains_term(std::string_view hay, std::string_view term) {
  return find_term(hay, term) != std::string_view::npos;
}

bool contains_all_terms(std::string_view hay, const std::vector<std::string>& terms) {
  for (const auto& t : terms)
    if (!contains_term(hay, t)) return false;
  return true;
}

std::size_t count_term(std::string_view hay, std::string_view term) {
  if (term.empty()) return 0;
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = hay.find(term, pos)) != std::string_view::npos) {
    const std::size_t end = pos + term.size();
    const bool left_ok = pos == 0 || !is_word_char(hay[pos - 1]);
    const bool right_ok = end == hay.size() || !is_word_char(hay[end]);
    if (left_ok && right_ok) {
      ++count;
      pos = end;
    } else {
      ++pos;
    }
  }
  return count;
}

std::size_t word_count(std::string_view s) {
  if (s.empty()) return 0;
  std::size_t words = 1;
  for (char c : s) words += (c == ' ');
  return words;
}

std::string double_to_string(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace wikivote
