#pragma once

#include <optional>
#include <string>
#include <vector>

#include "text.hpp"
#include "vocab.hpp"

namespace compresso {

/// Per-sentence map from numbered OOV slots (1..M) to surface words, assigned
/// in order of first appearance.
class OovTable {
 public:
  int size() const { return static_cast<int>(slots_.size()); }
  std::optional<int> slot_of(const std::string& word) const;  // 1-based
  const std::string* word_of(int slot) const;                 // null if absent
  int add(const std::string& word);                           // returns slot

  const std::vector<std::string>& slots() const { return slots_; }

 private:
  std::vector<std::string> slots_;
};

struct EncodedSentence {
  std::vector<TokenId> ids;
  OovTable table;
};

/// In-vocabulary words map to their content ids; each distinct OOV word gets
/// the next numbered OOV id; repeats reuse their slot; words beyond max_oov
/// distinct slots map to UNK. max_oov <= 0 means vocab.num_oov().
EncodedSentence encode_with_oov(const TokenSeq& sentence, const Vocabulary& vocab,
                                int max_oov = 0);

/// Second-pass encoding that extends an existing table (noise words, paired
/// targets). Reference slots therefore keep the lower indices.
std::vector<TokenId> encode_extending(const TokenSeq& tokens, const Vocabulary& vocab,
                                      OovTable& table, int max_oov = 0);

/// Inverse mapping. OOV ids with no slot in the table decode to "<unk>".
TokenSeq decode_with_oov(const std::vector<TokenId>& ids, const Vocabulary& vocab,
                         const OovTable& table);

}  // namespace compresso
