#pragma once

#include <Eigen/Core>
#include <string>

#include "text.hpp"
#include "vocab.hpp"

namespace compresso {

/// Pre-trained word vectors for the content portion of the id space. These
/// rows are frozen during training; special/OOV rows are trainable and live
/// with the model parameters instead.
struct EmbeddingMatrix {
  int dim = 0;
  Eigen::MatrixXd content;  // content_size x dim, row i = content id offset i

  const Eigen::MatrixXd::ConstRowXpr row_for(const Vocabulary& vocab, TokenId id) const {
    return content.row(id - vocab.num_specials());
  }
};

inline constexpr uint64_t kDefaultEmbeddingSeed = 0x5eedf11eULL;

/// Loads textual word vectors ("word v1 v2 ... vD", uniform D). Content words
/// absent from the file get deterministic seeded-random rows scaled to the
/// file vectors' per-dimension standard deviation.
EmbeddingMatrix load_embeddings(const std::string& path, const Vocabulary& vocab,
                                uint64_t seed = kDefaultEmbeddingSeed);

/// Fully random (seeded) matrix for runs without a vector file.
EmbeddingMatrix random_embeddings(int dim, const Vocabulary& vocab, uint64_t seed,
                                  double sigma = 0.3);

}  // namespace compresso
