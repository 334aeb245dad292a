#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace wikivote {

// ASCII lowercase; bytes outside ASCII pass through unchanged.
std::string to_lower(std::string_view s);

// Lowercases and collapses whitespace runs to single spaces, trimming both
// ends. This is the only normalization applied to concept surface forms.
std::string normalize_surface(std::string_view s);

// Splits on whitespace and strips punctuation from both ends of each token,
// dropping tokens that end up empty. Interior punctuation ("md-11", "don't")
// is preserved.
std::vector<std::string> tokenize(std::string_view text);

// Splits on a separator, keeping empty fields.
std::vector<std::string> split(std::string_view s, char sep);

// Position of the first occurrence of `term` in `hay` that is delimited by
// non-alphanumeric characters (or the string ends) on both sides, or npos.
// Both arguments must already be lowercase.
std::size_t find_term(std::string_view hay, std::string_view term);

bool contains_term(std::string_view hay, std::string_view term);
bool contains_all_terms(std::string_view hay, const std::vector<std::string>& terms);

// Number of non-overlapping word-bounded occurrences.
std::size_t count_term(std::string_view hay, std::string_view term);

// Words in a normalized (single-space separated) string.
std::size_t word_count(std::string_view s);

// Shortest decimal form that parses back to the identical double.
std::string double_to_string(double v);

}  // namespace wikivote
