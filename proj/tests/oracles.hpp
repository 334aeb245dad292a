// Brute-force reference implementations used to check the library. Each is
// written from the definitions directly, sharing no code with the library
// beyond its public types, and favors obviousness over speed.
#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wikivote/cdor.hpp"
#include "wikivote/extract.hpp"

namespace oracle {

// Greedy longest-match over a plain set of keys: at every position try the
// longest window first, checking membership by joining tokens by hand.
inline std::vector<std::string> longest_match(const std::vector<std::string>& tokens,
                                              const std::set<std::string>& keys,
                                              std::size_t max_words) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    bool matched = false;
    for (std::size_t w = std::min(max_words, tokens.size() - i); w >= 1 && !matched; --w) {
      std::string joined;
      for (std::size_t k = i; k < i + w; ++k) {
        if (!joined.empty()) joined += ' ';
        for (const char c : tokens[k])
          joined += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      if (keys.count(joined)) {
        out.push_back(joined);
        i += w;
        matched = true;
      }
    }
    if (!matched) ++i;
  }
  return out;
}

inline bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Word-bounded containment checked position by position.
inline bool contains_word_bounded(const std::string& hay, const std::string& term) {
  if (term.empty() || term.size() > hay.size()) return false;
  for (std::size_t pos = 0; pos + term.size() <= hay.size(); ++pos) {
    if (hay.compare(pos, term.size(), term) != 0) continue;
    const bool left_ok = pos == 0 || !word_char(hay[pos - 1]);
    const std::size_t end = pos + term.size();
    const bool right_ok = end == hay.size() || !word_char(hay[end]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

inline std::string lower(const std::string& s) {
  std::string out;
  for (const char c : s) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Exhaustive back-to-front cutoff scan; returns the accepted prefix length.
inline int cutoff(const std::vector<wikivote::SearchResult>& results,
                  const std::vector<std::string>& terms, int default_cdors) {
  for (std::size_t r = results.size(); r >= 1; --r) {
    const std::string hay = lower(results[r - 1].title) + " " + lower(results[r - 1].snippet);
    bool all = true;
    for (const auto& t : terms)
      if (!contains_word_bounded(hay, lower(t))) all = false;
    if (all) {
      const int rank = static_cast<int>(r);
      if (rank >= default_cdors) return rank;
      break;
    }
  }
  return std::min<int>(default_cdors, static_cast<int>(results.size()));
}

// Dense voting tables computed from (category index, bag) pairs.
struct DenseModel {
  std::vector<std::string> tokens;                 // row order
  std::vector<std::vector<double>> proximity;      // [token][category]
  std::vector<std::vector<double>> normalized;
  std::vector<double> entropy;
  std::vector<std::vector<double>> votes;
};

inline DenseModel voting_tables(const std::vector<std::pair<int, std::map<std::string, int>>>& corpus,
                                std::size_t n, double alpha) {
  DenseModel m;
  std::map<std::string, std::size_t> index;
  for (const auto& [cat, bag] : corpus)
    for (const auto& [tok, cnt] : bag)
      if (cnt > 0 && !index.count(tok)) {
        index[tok] = m.tokens.size();
        m.tokens.push_back(tok);
      }
  m.proximity.assign(m.tokens.size(), std::vector<double>(n, 0.0));
  for (const auto& [cat, bag] : corpus) {
    int total = 0;
    for (const auto& [tok, cnt] : bag) total += cnt;
    if (total == 0) continue;
    for (const auto& [tok, cnt] : bag)
      m.proximity[index[tok]][cat] += static_cast<double>(cnt) / total;
  }
  m.normalized.assign(m.tokens.size(), std::vector<double>(n, 0.0));
  m.entropy.assign(m.tokens.size(), 0.0);
  m.votes.assign(m.tokens.size(), std::vector<double>(n, 0.0));
  for (std::size_t t = 0; t < m.tokens.size(); ++t) {
    double mass = 0.0, smoothed = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mass += m.proximity[t][i];
      smoothed += m.proximity[t][i] + alpha;
    }
    for (std::size_t i = 0; i < n; ++i) {
      m.normalized[t][i] = (m.proximity[t][i] + alpha) / smoothed;
      m.entropy[t] -= m.normalized[t][i] * std::log2(m.normalized[t][i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double share = mass > 0.0 ? m.proximity[t][i] / mass : m.normalized[t][i];
      m.votes[t][i] = share / m.entropy[t];
    }
  }
  return m;
}

inline std::vector<double> score(const DenseModel& m, const std::map<std::string, int>& bag,
                                 std::size_t n) {
  std::vector<double> s(n, 0.0);
  for (std::size_t t = 0; t < m.tokens.size(); ++t) {
    const auto it = bag.find(m.tokens[t]);
    if (it == bag.end()) continue;
    for (std::size_t i = 0; i < n; ++i) s[i] += it->second * m.votes[t][i];
  }
  return s;
}

// Average precision of one ranked run: gold flags in rank order.
inline double average_precision(const std::vector<bool>& gold_in_rank_order) {
  double hits = 0.0, sum = 0.0;
  for (std::size_t pos = 0; pos < gold_in_rank_order.size(); ++pos)
    if (gold_in_rank_order[pos]) {
      hits += 1.0;
      sum += hits / static_cast<double>(pos + 1);
    }
  return hits > 0.0 ? sum / hits : 0.0;
}

// MAP over categories from (record id, per-category scores, gold index) rows,
// ranking each category independently by score desc, id asc.
inline double mean_average_precision(
    const std::vector<std::tuple<std::string, std::vector<double>, int>>& rows, std::size_t n) {
  double sum = 0.0;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> order(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double sa = std::get<1>(rows[a])[i], sb = std::get<1>(rows[b])[i];
      if (sa != sb) return sa > sb;
      return std::get<0>(rows[a]) < std::get<0>(rows[b]);
    });
    std::vector<bool> flags;
    bool any = false;
    for (const std::size_t k : order) {
      const bool g = std::get<2>(rows[k]) == static_cast<int>(i);
      flags.push_back(g);
      any = any || g;
    }
    if (!any) continue;
    sum += average_precision(flags);
    ++counted;
  }
  return counted ? sum / counted : 0.0;
}

}  // namespace oracle
