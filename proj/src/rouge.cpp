#include "rouge.hpp"

#include <algorithm>
#include <unordered_map>

#include "error.hpp"

namespace compresso {

RougeScore make_rouge(double precision, double recall) {
  RougeScore s;
  s.precision = precision;
  s.recall = recall;
  s.f1 = (precision + recall) > 0.0
             ? 2.0 * precision * recall / (precision + recall)
             : 0.0;
  return s;
}

namespace {

// n-grams keyed by tokens joined with an unlikely separator byte.
std::unordered_map<std::string, long> ngram_counts(const TokenSeq& tokens, int n) {
  std::unordered_map<std::string, long> counts;
  if (static_cast<size_t>(n) > tokens.size()) return counts;
  for (size_t i = 0; i + static_cast<size_t>(n) <= tokens.size(); ++i) {
    std::string key;
    for (int j = 0; j < n; ++j) {
      if (j) key += '\x1f';
      key += tokens[i + static_cast<size_t>(j)];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

RougeScore rouge_n(const TokenSeq& candidate, const TokenSeq& reference, int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "rouge n must be >= 1");
  auto cand = ngram_counts(candidate, n);
  auto ref = ngram_counts(reference, n);

  long cand_total = 0;
  for (const auto& kv : cand) cand_total += kv.second;
  long ref_total = 0;
  for (const auto& kv : ref) ref_total += kv.second;

  long overlap = 0;
  for (const auto& kv : cand) {
    auto it = ref.find(kv.first);
    if (it != ref.end()) overlap += std::min(kv.second, it->second);
  }

  double p = cand_total > 0 ? static_cast<double>(overlap) / cand_total : 0.0;
  double r = ref_total > 0 ? static_cast<double>(overlap) / ref_total : 0.0;
  return make_rouge(p, r);
}

RougeScore rouge_l(const TokenSeq& candidate, const TokenSeq& reference) {
  const size_t m = candidate.size();
  const size_t n = reference.size();
  if (m == 0 || n == 0) return make_rouge(0.0, 0.0);

  // Rolling two-row LCS table.
  std::vector<long> prev(n + 1, 0), cur(n + 1, 0);
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = 1; j <= n; ++j) {
      if (candidate[i - 1] == reference[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    std::swap(prev, cur);
  }
  const long lcs = prev[n];
  return make_rouge(static_cast<double>(lcs) / static_cast<double>(m),
                    static_cast<double>(lcs) / static_cast<double>(n));
}

}  // namespace compresso
