#include "embeddings.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "rng.hpp"

namespace compresso {

namespace {

Eigen::VectorXd seeded_row(const std::string& word, uint64_t seed, int dim,
                           const Eigen::VectorXd& per_dim_std) {
  Rng rng(Rng::mix(seed, hash_bytes(word.data(), word.size())));
  Eigen::VectorXd v(dim);
  for (int d = 0; d < dim; ++d) v[d] = rng.normal() * per_dim_std[d];
  return v;
}

}  // namespace

EmbeddingMatrix load_embeddings(const std::string& path, const Vocabulary& vocab,
                                uint64_t seed) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open embedding file: " + path);

  EmbeddingMatrix out;
  const int content = vocab.content_size();
  std::vector<bool> found(static_cast<size_t>(content), false);

  Eigen::VectorXd sum, sumsq;
  long file_rows = 0;

  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    std::vector<double> vals;
    double v;
    while (ls >> v) vals.push_back(v);
    if (!ls.eof()) {
      fail(ErrorCode::parse, "embedding line " + std::to_string(line_no) + " is malformed");
    }
    if (vals.empty()) {
      fail(ErrorCode::parse, "embedding line " + std::to_string(line_no) + " has no values");
    }
    if (out.dim == 0) {
      out.dim = static_cast<int>(vals.size());
      out.content.setZero(content, out.dim);
      sum.setZero(out.dim);
      sumsq.setZero(out.dim);
    } else if (static_cast<int>(vals.size()) != out.dim) {
      fail(ErrorCode::parse, "embedding dimension mismatch at line " +
                                 std::to_string(line_no) + ": expected " +
                                 std::to_string(out.dim) + ", got " +
                                 std::to_string(vals.size()));
    }
    Eigen::Map<const Eigen::VectorXd> vec(vals.data(), out.dim);
    sum += vec;
    sumsq += vec.cwiseProduct(vec);
    ++file_rows;
    if (auto id = vocab.id_of(word); id && !vocab.is_special(*id)) {
      int offset = *id - vocab.num_specials();
      out.content.row(offset) = vec.transpose();
      found[static_cast<size_t>(offset)] = true;
    }
  }
  if (out.dim == 0) fail(ErrorCode::parse, "embedding file has no vectors: " + path);

  Eigen::VectorXd per_dim_std(out.dim);
  if (file_rows > 1) {
    Eigen::VectorXd mean = sum / static_cast<double>(file_rows);
    per_dim_std = (sumsq / static_cast<double>(file_rows) - mean.cwiseProduct(mean))
                      .cwiseMax(0.0)
                      .cwiseSqrt();
  } else {
    per_dim_std.setOnes();
  }
  // Guard against constant dimensions in tiny files.
  for (int d = 0; d < out.dim; ++d) {
    if (per_dim_std[d] <= 0.0) per_dim_std[d] = 1.0;
  }

  for (int i = 0; i < content; ++i) {
    if (found[static_cast<size_t>(i)]) continue;
    const std::string& word = vocab.token_of(vocab.num_specials() + i);
    out.content.row(i) = seeded_row(word, seed, out.dim, per_dim_std).transpose();
  }
  return out;
}

EmbeddingMatrix random_embeddings(int dim, const Vocabulary& vocab, uint64_t seed,
                                  double sigma) {
  if (dim < 1) fail(ErrorCode::invalid_argument, "embedding dim must be >= 1");
  EmbeddingMatrix out;
  out.dim = dim;
  out.content.resize(vocab.content_size(), dim);
  Eigen::VectorXd scale = Eigen::VectorXd::Constant(dim, sigma);
  for (int i = 0; i < vocab.content_size(); ++i) {
    const std::string& word = vocab.token_of(vocab.num_specials() + i);
    out.content.row(i) = seeded_row(word, seed, dim, scale).transpose();
  }
  return out;
}

}  // namespace compresso
