#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "text.hpp"

namespace compresso {

using TokenId = int32_t;

/// Frozen id space: a reserved prefix of special tokens (PAD, SOS, EOS, UNK,
/// OOV-1..OOV-M) followed by the top-K content words in descending corpus
/// frequency, ties broken by first occurrence.
class Vocabulary {
 public:
  static constexpr TokenId kPad = 0;
  static constexpr TokenId kSos = 1;
  static constexpr TokenId kEos = 2;
  static constexpr TokenId kUnk = 3;
  static constexpr int kFixedSpecials = 4;

  Vocabulary() = default;
  Vocabulary(std::vector<std::string> content_tokens, int num_oov);

  int num_oov() const { return num_oov_; }
  int num_specials() const { return kFixedSpecials + num_oov_; }
  int content_size() const {
    return static_cast<int>(tokens_.size()) - num_specials();
  }
  int total_size() const { return static_cast<int>(tokens_.size()); }

  TokenId oov_id(int slot) const;      // slot in 1..num_oov
  bool is_oov_id(TokenId id) const;
  int oov_slot(TokenId id) const;      // 1-based; id must satisfy is_oov_id
  bool is_special(TokenId id) const { return id >= 0 && id < num_specials(); }

  const std::string& token_of(TokenId id) const;
  std::optional<TokenId> id_of(const std::string& token) const;

  /// True for the reserved literal spellings ("<pad>", "<oov-3>", ...).
  bool is_reserved_literal(const std::string& token) const;

  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  int num_oov_ = 0;
  std::vector<std::string> tokens_;                    // token_of, id order
  std::unordered_map<std::string, TokenId> ids_;       // id_of
};

/// Top-`size` words by frequency (first-occurrence tie-break). Throws
/// ErrorCode::invalid_argument on an empty corpus.
Vocabulary build_vocabulary(const std::vector<TokenSeq>& corpus, size_t size,
                            int num_oov = 10);

/// Text format: header "compresso-vocab v1 <count>", then one token per line
/// in id order, specials first.
void save_vocabulary(const Vocabulary& vocab, const std::string& path);
Vocabulary load_vocabulary(const std::string& path);

}  // namespace compresso
