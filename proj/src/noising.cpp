#include "noising.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace compresso {

const TokenSeq& CorpusSampler::sample_excluding(size_t exclude, Rng& rng) const {
  return at(sample_index_excluding(exclude, rng));
}

size_t CorpusSampler::sample_index_excluding(size_t exclude, Rng& rng) const {
  const size_t n = size();
  if (n == 0) fail(ErrorCode::invalid_argument, "corpus sampler is empty");
  if (exclude >= n) return static_cast<size_t>(rng.bounded(n));
  if (n == 1) fail(ErrorCode::invalid_argument, "corpus has no donor sentences");
  size_t i = static_cast<size_t>(rng.bounded(n - 1));
  return i >= exclude ? i + 1 : i;
}

std::pair<long, long> extension_band(const NoiseConfig& cfg, size_t len) {
  const double L = static_cast<double>(len);
  long lo = static_cast<long>(std::ceil(cfg.extension_min * L));
  long hi = static_cast<long>(std::floor(cfg.extension_max * L));
  lo = std::max<long>(lo, 1);
  hi = std::max(hi, lo);
  return {lo, hi};
}

TokenSeq sample_noise_words(const TokenSeq& reference, size_t reference_index,
                            const CorpusSampler& corpus, const NoiseConfig& cfg,
                            Rng& rng) {
  if (reference.empty()) fail(ErrorCode::invalid_argument, "reference is empty");
  if (cfg.donors < 1) fail(ErrorCode::invalid_argument, "donors must be >= 1");

  auto [lo, hi] = extension_band(cfg, reference.size());
  const long k = rng.uniform_int(lo, hi);

  // Distinct donor sentences, reference excluded.
  std::vector<size_t> donor_idx;
  donor_idx.reserve(static_cast<size_t>(cfg.donors));
  {
    const size_t excluded = reference_index < corpus.size() ? 1u : 0u;
    if (corpus.size() - excluded < static_cast<size_t>(cfg.donors)) {
      fail(ErrorCode::invalid_argument, "corpus smaller than donor count");
    }
    while (donor_idx.size() < static_cast<size_t>(cfg.donors)) {
      size_t i = corpus.sample_index_excluding(reference_index, rng);
      if (std::find(donor_idx.begin(), donor_idx.end(), i) == donor_idx.end()) {
        donor_idx.push_back(i);
      }
    }
  }

  // Even split, remainder to the first donors; shortfalls roll forward.
  std::vector<long> quota(donor_idx.size());
  for (size_t d = 0; d < quota.size(); ++d) {
    quota[d] = k / cfg.donors + (static_cast<long>(d) < k % cfg.donors ? 1 : 0);
  }

  TokenSeq noise;
  noise.reserve(static_cast<size_t>(k));
  long carry = 0;
  for (size_t d = 0; d < donor_idx.size(); ++d) {
    const TokenSeq& donor = corpus.at(donor_idx[d]);
    long want = quota[d] + carry;
    long take = std::min<long>(want, static_cast<long>(donor.size()));
    carry = want - take;
    for (size_t pos : rng.sample_indices(donor.size(), static_cast<size_t>(take))) {
      noise.push_back(donor[pos]);
    }
  }
  return noise;  // may be shorter than k if every donor ran dry
}

std::vector<TokenId> shuffle_unigram(std::vector<TokenId> seq, Rng& rng) {
  rng.shuffle(seq);
  return seq;
}

std::vector<TokenId> shuffle_bigram(std::vector<TokenId> seq, Rng& rng) {
  const size_t n = seq.size();
  std::vector<size_t> unit_starts;
  unit_starts.reserve(n / 2 + 1);
  for (size_t i = 0; i < n; i += 2) unit_starts.push_back(i);
  rng.shuffle(unit_starts);

  std::vector<TokenId> out;
  out.reserve(n);
  for (size_t start : unit_starts) {
    out.push_back(seq[start]);
    if (start + 1 < n) out.push_back(seq[start + 1]);
  }
  return out;
}

NoisedExample make_training_example(const TokenSeq& reference, size_t reference_index,
                                    const CorpusSampler& corpus, const Vocabulary& vocab,
                                    const NoiseConfig& cfg, Rng& rng) {
  if (reference.empty()) fail(ErrorCode::invalid_argument, "reference is empty");

  NoisedExample ex;
  // First pass: the reference owns the low OOV slots.
  std::vector<TokenId> ref_ids = encode_extending(reference, vocab, ex.oov_table);
  // Second pass: noise words extend the same table.
  TokenSeq noise = sample_noise_words(reference, reference_index, corpus, cfg, rng);
  std::vector<TokenId> noise_ids = encode_extending(noise, vocab, ex.oov_table);

  std::vector<TokenId> combined = ref_ids;
  combined.insert(combined.end(), noise_ids.begin(), noise_ids.end());
  ex.input_ids = cfg.shuffle_mode == ShuffleMode::unigram
                     ? shuffle_unigram(std::move(combined), rng)
                     : shuffle_bigram(std::move(combined), rng);

  ex.target_ids = std::move(ref_ids);
  ex.target_ids.push_back(Vocabulary::kEos);
  ex.countdown_len = static_cast<int>(ex.target_ids.size());
  return ex;
}

}  // namespace compresso
