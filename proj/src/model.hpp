#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "embeddings.hpp"
#include "noising.hpp"
#include "vocab.hpp"

namespace compresso {

template <typename S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

struct ModelConfig {
  int emb_dim = 100;
  int hidden = 512;
  int layers = 3;
  int vocab_size = 0;  // full id space: specials + content
  int num_oov = 10;
  bool use_attention = true;
  bool use_conditioning = false;
  int sent_emb_dim = 0;  // must match the embedder when conditioning is on

  int num_specials() const { return Vocabulary::kFixedSpecials + num_oov; }
  int content_size() const { return vocab_size - num_specials(); }
  int attn_dim() const { return hidden; }
  void validate() const;
};

template <typename S>
struct LstmWeights {
  MatX<S> wx;  // 4H x input
  MatX<S> wh;  // 4H x H
  VecX<S> b;   // 4H
};

/// A named view of one trainable tensor's flat storage.
template <typename S>
struct ParamRef {
  std::string name;
  S* data;
  long size;
};

/// All model tensors. Word-embedding rows are frozen (never part of the
/// trainable registry); special/OOV rows are trainable.
template <typename S>
struct ModelParams {
  MatX<S> emb_special;  // num_specials x E, trainable
  MatX<S> word_emb;     // content x E, frozen

  std::vector<LstmWeights<S>> enc_fwd, enc_bwd;  // per layer
  std::vector<LstmWeights<S>> dec;               // per layer

  // Plain encoder->decoder bridge, one affine map per state kind shared
  // across layers (present when conditioning is off).
  MatX<S> bridge_h_w, bridge_c_w;  // H x 2H
  VecX<S> bridge_h_b, bridge_c_b;  // H

  // Sentence-conditioned bridge: state kind k gets f_k([enc_final_k ; s]).
  MatX<S> cond_h_w, cond_c_w;  // H x (2H + sent_emb_dim)
  VecX<S> cond_h_b, cond_c_b;  // H

  MatX<S> attn_enc_w;  // A x 2H
  MatX<S> attn_dec_w;  // A x H
  VecX<S> attn_b;      // A
  VecX<S> attn_v;      // A

  MatX<S> out_w;  // V x (3H with attention, H without)
  VecX<S> out_b;  // V

  /// Trainable tensors in the serialization order. Shapes are a pure
  /// function of the config.
  std::vector<ParamRef<S>> trainable_refs();
  std::vector<ParamRef<const S>> trainable_refs() const;
  long trainable_count() const;

  /// Same shapes, all trainable tensors zeroed, word_emb left empty.
  ModelParams<S> zeros_like() const;

  VecX<S> embedding_of(TokenId id, int num_specials) const;
};

template <typename S>
ModelParams<S> init_params(const ModelConfig& cfg, const EmbeddingMatrix& emb,
                           uint64_t seed);

/// One direction of one layer over a whole sequence; columns are positions.
template <typename S>
struct LstmTrace {
  MatX<S> i, f, g, o, c, h;  // H x N
};

template <typename S>
struct Encoded {
  MatX<S> outputs;  // 2H x N, top-layer forward/backward concatenation
  std::vector<VecX<S>> final_h;  // per layer, [fwd_h(N-1); bwd_h(0)], 2H
  std::vector<VecX<S>> final_c;  // per layer, 2H
  MatX<S> attn_proj;             // A x N (attention models only)

  // Backward caches.
  std::vector<MatX<S>> layer_inputs;  // per layer, in_dim x N
  std::vector<LstmTrace<S>> fwd_trace, bwd_trace;
};

template <typename S>
Encoded<S> encode(const std::vector<TokenId>& input_ids, const ModelParams<S>& params,
                  const ModelConfig& cfg);

template <typename S>
struct DecState {
  MatX<S> h, c;  // H x layers
};

template <typename S>
DecState<S> init_decoder(const Encoded<S>& enc, const VecX<S>* sent_emb,
                         const ModelParams<S>& params, const ModelConfig& cfg);

template <typename S>
struct StepOut {
  VecX<S> logits;  // V
  VecX<S> attn;    // encoder positions; empty without attention
};

/// One greedy/teacher-forced decoder step. Updates `state` in place. The
/// countdown scalar is fed raw alongside the previous token's embedding.
template <typename S>
StepOut<S> decode_step(DecState<S>& state, TokenId prev, long countdown,
                       const Encoded<S>& enc, const ModelParams<S>& params,
                       const ModelConfig& cfg);

template <typename S>
struct ForwardTrace {
  S loss = S(0);   // mean NLL over target positions
  MatX<S> logits;  // V x T
  MatX<S> probs;   // V x T

  Encoded<S> enc;
  DecState<S> dec0;
  MatX<S> dec_x0;                     // (E+1) x T decoder layer-0 inputs
  std::vector<LstmTrace<S>> dec_trace;
  MatX<S> attn_alpha;                 // N x T
  std::vector<MatX<S>> attn_tanh;     // per step, A x N
  MatX<S> ctx;                        // 2H x T
  VecX<S> sent_emb;                   // copy when conditioning
};

/// Teacher-forced negative log likelihood: step t consumes gold token t-1
/// (SOS first) and countdown T - t; EOS is the final target and receives
/// countdown 0.
template <typename S>
ForwardTrace<S> forward_nll(const ModelParams<S>& params, const ModelConfig& cfg,
                            const NoisedExample& example, const VecX<S>* sent_emb);

/// Accumulates dLoss/dParams into `grads` (shapes from zeros_like). `scale`
/// multiplies the example's contribution, e.g. 1/batch_size.
template <typename S>
void backward(const ModelParams<S>& params, const ModelConfig& cfg,
              const NoisedExample& example, const ForwardTrace<S>& trace, S scale,
              ModelParams<S>& grads);

struct GradCheckReport {
  double max_rel_error = 0.0;
  size_t coords_checked = 0;
  std::string worst_param;
};

/// Central finite differences against the analytic gradient over a seeded
/// subsample of trainable coordinates. Double precision only.
GradCheckReport check_gradients(ModelParams<double>& params, const ModelConfig& cfg,
                                const NoisedExample& example,
                                const Eigen::VectorXd* sent_emb, double eps,
                                size_t max_coords, uint64_t seed);

/// A trained model bundle: config, id space, and parameters.
template <typename S>
struct Model {
  ModelConfig cfg;
  Vocabulary vocab;
  ModelParams<S> params;
};

/// Deterministic sentence-embedding provider.
class SentenceEmbedder {
 public:
  virtual ~SentenceEmbedder() = default;
  virtual Eigen::VectorXd embed(const TokenSeq& sentence) const = 0;
  virtual int dim() const = 0;
};

/// Baseline embedder: L2-normalized mean of the frozen word vectors of the
/// sentence's in-vocabulary tokens (zero vector if there are none).
template <typename S>
class MeanWordEmbedder final : public SentenceEmbedder {
 public:
  explicit MeanWordEmbedder(const Model<S>* model) : model_(model) {}
  Eigen::VectorXd embed(const TokenSeq& sentence) const override;
  int dim() const override;

 private:
  const Model<S>* model_;
};

}  // namespace compresso
