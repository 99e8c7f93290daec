#include "vocab.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"
#include "io.hpp"

namespace compresso {

namespace {

std::string special_literal(TokenId id, int num_oov) {
  switch (id) {
    case Vocabulary::kPad: return "<pad>";
    case Vocabulary::kSos: return "<sos>";
    case Vocabulary::kEos: return "<eos>";
    case Vocabulary::kUnk: return "<unk>";
    default: break;
  }
  int slot = id - Vocabulary::kFixedSpecials + 1;
  if (slot >= 1 && slot <= num_oov) return "<oov-" + std::to_string(slot) + ">";
  fail(ErrorCode::invalid_argument, "not a special id: " + std::to_string(id));
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> content_tokens, int num_oov)
    : num_oov_(num_oov) {
  if (num_oov < 0) fail(ErrorCode::invalid_argument, "num_oov must be >= 0");
  tokens_.reserve(content_tokens.size() + static_cast<size_t>(num_specials()));
  for (TokenId id = 0; id < num_specials(); ++id) {
    tokens_.push_back(special_literal(id, num_oov_));
  }
  for (auto& tok : content_tokens) tokens_.push_back(std::move(tok));
  ids_.reserve(tokens_.size() * 2);
  for (size_t i = 0; i < tokens_.size(); ++i) {
    auto [it, inserted] = ids_.emplace(tokens_[i], static_cast<TokenId>(i));
    if (!inserted) {
      fail(ErrorCode::invalid_argument, "duplicate token in vocabulary: " + tokens_[i]);
    }
  }
}

TokenId Vocabulary::oov_id(int slot) const {
  if (slot < 1 || slot > num_oov_) {
    fail(ErrorCode::invalid_argument, "oov slot out of range: " + std::to_string(slot));
  }
  return kFixedSpecials + slot - 1;
}

bool Vocabulary::is_oov_id(TokenId id) const {
  return id >= kFixedSpecials && id < num_specials();
}

int Vocabulary::oov_slot(TokenId id) const {
  if (!is_oov_id(id)) {
    fail(ErrorCode::invalid_argument, "not an oov id: " + std::to_string(id));
  }
  return id - kFixedSpecials + 1;
}

const std::string& Vocabulary::token_of(TokenId id) const {
  if (id < 0 || static_cast<size_t>(id) >= tokens_.size()) {
    fail(ErrorCode::invalid_argument, "token id out of range: " + std::to_string(id));
  }
  return tokens_[static_cast<size_t>(id)];
}

std::optional<TokenId> Vocabulary::id_of(const std::string& token) const {
  auto it = ids_.find(token);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool Vocabulary::is_reserved_literal(const std::string& token) const {
  auto it = ids_.find(token);
  return it != ids_.end() && is_special(it->second);
}

Vocabulary build_vocabulary(const std::vector<TokenSeq>& corpus, size_t size,
                            int num_oov) {
  if (size < 1) fail(ErrorCode::invalid_argument, "vocabulary size must be >= 1");

  struct Entry {
    long freq = 0;
    size_t first_seen = 0;
  };
  std::unordered_map<std::string, Entry> counts;
  size_t position = 0;
  for (const TokenSeq& sent : corpus) {
    for (const std::string& tok : sent) {
      auto [it, inserted] = counts.emplace(tok, Entry{});
      if (inserted) it->second.first_seen = position;
      ++it->second.freq;
      ++position;
    }
  }
  if (position == 0) fail(ErrorCode::invalid_argument, "empty corpus");

  std::vector<const std::pair<const std::string, Entry>*> order;
  order.reserve(counts.size());
  for (const auto& kv : counts) order.push_back(&kv);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->second.freq != b->second.freq) return a->second.freq > b->second.freq;
    return a->second.first_seen < b->second.first_seen;
  });

  const size_t keep = std::min(size, order.size());
  std::vector<std::string> content;
  content.reserve(keep);
  for (size_t i = 0; i < keep; ++i) content.push_back(order[i]->first);
  return Vocabulary(std::move(content), num_oov);
}

void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
  std::ostringstream out;
  out << "compresso-vocab v1 " << vocab.total_size() << "\n";
  for (TokenId id = 0; id < vocab.total_size(); ++id) {
    out << vocab.token_of(id) << "\n";
  }
  atomic_write_file(path, out.str());
}

Vocabulary load_vocabulary(const std::string& path) {
  std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) fail(ErrorCode::parse, "vocabulary file is empty: " + path);

  std::istringstream header(lines[0]);
  std::string magic, version;
  long count = -1;
  header >> magic >> version >> count;
  if (magic != "compresso-vocab") {
    fail(ErrorCode::parse, "not a vocabulary file: " + path);
  }
  if (version != "v1") {
    fail(ErrorCode::version, "unsupported vocabulary version: " + version);
  }
  if (count < 0 || static_cast<size_t>(count) + 1 > lines.size()) {
    fail(ErrorCode::parse, "vocabulary file truncated: " + path);
  }

  // Infer num_oov from the reserved prefix, then validate it.
  int num_oov = 0;
  for (size_t i = 1 + Vocabulary::kFixedSpecials; i < lines.size(); ++i) {
    if (lines[i] != "<oov-" + std::to_string(num_oov + 1) + ">") break;
    ++num_oov;
  }
  const int num_specials = Vocabulary::kFixedSpecials + num_oov;
  if (count < num_specials) {
    fail(ErrorCode::parse, "vocabulary file missing special tokens: " + path);
  }
  std::vector<std::string> content;
  content.reserve(static_cast<size_t>(count - num_specials));
  for (long i = num_specials; i < count; ++i) {
    content.push_back(lines[static_cast<size_t>(i) + 1]);
  }
  Vocabulary vocab(std::move(content), num_oov);
  for (TokenId id = 0; id < vocab.num_specials(); ++id) {
    if (vocab.token_of(id) != lines[static_cast<size_t>(id) + 1]) {
      fail(ErrorCode::parse, "unexpected special token order in: " + path);
    }
  }
  return vocab;
}

}  // namespace compresso
