#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

namespace clustlda {

inline constexpr const char* kVersion = "1.0.0";

// Model-level hyperparameters shared by the generator and the fitters.
// The unconstrained topic space has k-1 dimensions (the last topic
// coordinate is pinned to zero under the softmax convention).
struct Hyperparameters {
  int k = 5;                 // number of topics, >= 2
  int n_clusters = 3;        // number of author groups, >= 1
  int vocab_size = 200;      // synthetic vocabulary size (generator only)
  double beta = 1.0;         // Dirichlet concentration for topic-word rows
  double eta = 0.5;          // Dirichlet concentration for group assignment
  double sigma0_sq = 0.25;   // prior variance of cluster-level topic weights
  Eigen::MatrixXd sigma;     // document-level covariance, (k-1)x(k-1);
                             // empty means sigma_doc^2 * I
  double sigma_doc = 0.5;    // stddev used when sigma is empty
  int n_docs = 852;          // generator: documents to simulate
  int n_authors = 489;       // generator: authors to simulate
  double mean_doc_len = 20;  // generator: expected tokens per document
  std::uint64_t seed = 0;

  int unconstrained_dim() const { return k - 1; }
  Eigen::MatrixXd doc_covariance() const;
  void validate() const;  // throws std::invalid_argument on bad values
};

// Tolerances and iteration caps for the inference machinery.
struct FitControls {
  // per-document Newton ascent
  double newton_tol = 1e-5;  // gradient infinity-norm threshold
  int newton_max_iter = 500;
  int max_halvings = 30;
  // conditional topic-model EM
  double em_rel_tol = 1e-5;
  int em_max_iter = 200;
  int em_max_bad_iters = 3;  // consecutive decreases before stop-and-warn
  double sigma_floor = 1e-6;
  // author-level mixture EM
  double gmm_tol = 1e-6;
  int gmm_max_iter = 500;
  double gmm_cov_floor = 1e-8;
  // outer alternation
  int outer_max = 100;
  double epsilon = 0.0;  // halt when consecutive-partition RI >= 1 - epsilon
  // initialization
  int init_em_iters = 20;
  int kmeans_max_iter = 50;
};

}  // namespace clustlda
