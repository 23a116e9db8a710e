#pragma once

#include <map>
#include <span>

#include "cf4cf/core.hpp"

namespace cf4cf {

enum class Similarity { cosine, pearson };

struct NeighbourConfig {
  int k = 5;
  Similarity similarity = Similarity::cosine;
  // Rows sharing fewer co-rated algorithms than this get similarity 0; a
  // one-item overlap makes cosine degenerate.
  int min_overlap = 2;
};

// Initial ratings of the dataset being predicted for, keyed by algorithm.
using ActiveProfile = std::map<AlgorithmId, double>;

// Similarity over the co-rated entries of two aligned rating rows
// (NaN = missing). Degenerate cases (overlap below min_overlap, zero norm,
// zero variance under pearson) return 0 instead of throwing.
double row_similarity(std::span<const double> u, std::span<const double> v,
                      Similarity kind, int min_overlap);

// User-based nearest-neighbour predictor over an immutable rating matrix.
// Prediction is the similarity-weighted mean of the k most similar rows that
// rate the target, with |sim| in the denominator so negative correlations
// cannot flip the scale. Rows with zero similarity never vote; when none
// qualify the prediction falls back to the target's mean rating, and to the
// scale midpoint if the target is unrated everywhere.
class NeighbourModel {
 public:
  NeighbourModel(MetaRatingMatrix matrix, NeighbourConfig config);

  const MetaRatingMatrix& matrix() const { return matrix_; }
  const NeighbourConfig& config() const { return config_; }

  double predict(const ActiveProfile& active, const AlgorithmId& target) const;
  std::map<AlgorithmId, double> predict_all_missing(const ActiveProfile& active) const;

 private:
  std::vector<double> densify(const ActiveProfile& active) const;

  MetaRatingMatrix matrix_;
  NeighbourConfig config_;
};

}  // namespace cf4cf
