#pragma once

#include <cstdint>
#include <vector>

#include "oov.hpp"
#include "rng.hpp"
#include "text.hpp"
#include "vocab.hpp"

namespace compresso {

enum class ShuffleMode { unigram, bigram };

struct NoiseConfig {
  double extension_min = 0.40;
  double extension_max = 0.60;
  int donors = 2;
  ShuffleMode shuffle_mode = ShuffleMode::bigram;
};

/// A denoising training triple: the extended+shuffled input, the original
/// reference plus EOS as target, and the shared per-sentence OOV table.
struct NoisedExample {
  std::vector<TokenId> input_ids;
  std::vector<TokenId> target_ids;   // reference ids + EOS
  int countdown_len = 0;             // == target_ids.size()
  OovTable oov_table;
};

/// Uniform access to the sentences a noiser may draw donor words from.
class CorpusSampler {
 public:
  explicit CorpusSampler(const std::vector<TokenSeq>* sentences)
      : sentences_(sentences) {}

  size_t size() const { return sentences_->size(); }
  const TokenSeq& at(size_t i) const { return (*sentences_)[i]; }

  /// Uniform over all sentences except `exclude` (pass npos to allow all).
  const TokenSeq& sample_excluding(size_t exclude, Rng& rng) const;
  size_t sample_index_excluding(size_t exclude, Rng& rng) const;

 private:
  const std::vector<TokenSeq>* sentences_;
};

/// Words to append to `reference`: a uniformly drawn count in the configured
/// extension band, split as evenly as possible across donor sentences and
/// subsampled from each without replacement.
TokenSeq sample_noise_words(const TokenSeq& reference, size_t reference_index,
                            const CorpusSampler& corpus, const NoiseConfig& cfg,
                            Rng& rng);

std::vector<TokenId> shuffle_unigram(std::vector<TokenId> seq, Rng& rng);

/// Permutes adjacent pairs as units (trailing singleton kept as its own unit);
/// order within each unit is preserved.
std::vector<TokenId> shuffle_bigram(std::vector<TokenId> seq, Rng& rng);

/// Full pipeline: encode reference (first OOV pass), sample + encode noise
/// words (second pass), concatenate, shuffle, attach target and countdown.
NoisedExample make_training_example(const TokenSeq& reference, size_t reference_index,
                                    const CorpusSampler& corpus, const Vocabulary& vocab,
                                    const NoiseConfig& cfg, Rng& rng);

/// Inclusive extra-word band for a reference of length len: [ceil(min*len),
/// floor(max*len)], lower-clamped to 1, upper bound raised to the lower.
std::pair<long, long> extension_band(const NoiseConfig& cfg, size_t len);

}  // namespace compresso
