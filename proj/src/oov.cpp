#include "oov.hpp"

#include <algorithm>

#include "error.hpp"

namespace compresso {

std::optional<int> OovTable::slot_of(const std::string& word) const {
  for (size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i] == word) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

const std::string* OovTable::word_of(int slot) const {
  if (slot < 1 || slot > size()) return nullptr;
  return &slots_[static_cast<size_t>(slot - 1)];
}

int OovTable::add(const std::string& word) {
  if (slot_of(word)) fail(ErrorCode::invalid_argument, "duplicate oov word: " + word);
  slots_.push_back(word);
  return size();
}

namespace {

TokenId encode_token(const std::string& tok, const Vocabulary& vocab,
                     OovTable& table, int max_oov) {
  if (auto id = vocab.id_of(tok)) {
    // Reserved literals in raw text are not real words; treat as unknown.
    if (!vocab.is_special(*id)) return *id;
    return Vocabulary::kUnk;
  }
  if (auto slot = table.slot_of(tok)) return vocab.oov_id(*slot);
  if (table.size() < max_oov) return vocab.oov_id(table.add(tok));
  return Vocabulary::kUnk;
}

int resolve_max_oov(const Vocabulary& vocab, int max_oov) {
  if (max_oov <= 0) return vocab.num_oov();
  return std::min(max_oov, vocab.num_oov());
}

}  // namespace

EncodedSentence encode_with_oov(const TokenSeq& sentence, const Vocabulary& vocab,
                                int max_oov) {
  if (sentence.empty()) fail(ErrorCode::invalid_argument, "cannot encode an empty sentence");
  EncodedSentence out;
  out.ids = encode_extending(sentence, vocab, out.table, max_oov);
  return out;
}

std::vector<TokenId> encode_extending(const TokenSeq& tokens, const Vocabulary& vocab,
                                      OovTable& table, int max_oov) {
  const int cap = resolve_max_oov(vocab, max_oov);
  std::vector<TokenId> ids;
  ids.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    ids.push_back(encode_token(tok, vocab, table, cap));
  }
  return ids;
}

TokenSeq decode_with_oov(const std::vector<TokenId>& ids, const Vocabulary& vocab,
                         const OovTable& table) {
  TokenSeq out;
  out.reserve(ids.size());
  for (TokenId id : ids) {
    if (vocab.is_oov_id(id)) {
      const std::string* word = table.word_of(vocab.oov_slot(id));
      out.push_back(word ? *word : "<unk>");
    } else {
      out.push_back(vocab.token_of(id));
    }
  }
  return out;
}

}  // namespace compresso
