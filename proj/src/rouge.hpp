#pragma once

#include "text.hpp"

namespace compresso {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Harmonic F1 with the 0/0 -> 0 convention.
RougeScore make_rouge(double precision, double recall);

/// Clipped n-gram overlap. P = overlap / |candidate n-grams|,
/// R = overlap / |reference n-grams|; empty n-gram sets score 0.
RougeScore rouge_n(const TokenSeq& candidate, const TokenSeq& reference, int n);

/// Longest-common-subsequence score: P = LCS/|cand|, R = LCS/|ref|.
RougeScore rouge_l(const TokenSeq& candidate, const TokenSeq& reference);

}  // namespace compresso
