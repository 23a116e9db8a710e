#include "cf4cf/cf_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cf4cf {

double row_similarity(std::span<const double> u, std::span<const double> v,
                      Similarity kind, int min_overlap) {
  if (u.size() != v.size()) {
    throw InvalidInput("similarity requires rows of equal width");
  }
  if (min_overlap < 1) min_overlap = 1;

  std::vector<std::size_t> overlap;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!std::isnan(u[i]) && !std::isnan(v[i])) overlap.push_back(i);
  }
  if (overlap.size() < static_cast<std::size_t>(min_overlap)) return 0.0;

  if (kind == Similarity::cosine) {
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i : overlap) {
      dot += u[i] * v[i];
      nu += u[i] * u[i];
      nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) return 0.0;
    const double s = dot / (std::sqrt(nu) * std::sqrt(nv));
    return std::clamp(s, -1.0, 1.0);
  }

  // pearson: mean-center each row over the overlap
  double mu = 0.0, mv = 0.0;
  for (std::size_t i : overlap) {
    mu += u[i];
    mv += v[i];
  }
  mu /= static_cast<double>(overlap.size());
  mv /= static_cast<double>(overlap.size());
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i : overlap) {
    const double du = u[i] - mu;
    const double dv = v[i] - mv;
    dot += du * dv;
    nu += du * du;
    nv += dv * dv;
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;  // zero-variance row: undefined correlation
  const double s = dot / (std::sqrt(nu) * std::sqrt(nv));
  return std::clamp(s, -1.0, 1.0);
}

NeighbourModel::NeighbourModel(MetaRatingMatrix matrix, NeighbourConfig config)
    : matrix_(std::move(matrix)), config_(config) {
  if (config_.k < 1) {
    throw InvalidInput("neighbourhood size k must be >= 1");
  }
  if (config_.min_overlap < 1) {
    throw InvalidInput("min_overlap must be >= 1");
  }
  matrix_.validate();
}

std::vector<double> NeighbourModel::densify(const ActiveProfile& active) const {
  if (active.empty()) {
    throw InvalidInput("active profile must not be empty");
  }
  std::vector<double> dense(matrix_.n_algorithms(),
                            std::numeric_limits<double>::quiet_NaN());
  for (const auto& [id, rating] : active) {
    auto col = matrix_.algorithm_index(id);
    if (!col) {
      throw InvalidInput("active profile rates unknown algorithm '" + id + "'");
    }
    if (!std::isfinite(rating)) {
      throw InvalidInput("active rating for '" + id + "' is not finite");
    }
    dense[*col] = rating;
  }
  return dense;
}

double NeighbourModel::predict(const ActiveProfile& active,
                               const AlgorithmId& target) const {
  if (active.count(target) != 0) {
    throw InvalidInput("target '" + target + "' is already rated by the active profile");
  }
  auto col_opt = matrix_.algorithm_index(target);
  if (!col_opt) {
    throw InvalidInput("unknown target algorithm '" + target + "'");
  }
  const std::size_t col = *col_opt;
  const std::vector<double> dense = densify(active);

  struct Candidate {
    double sim;
    std::size_t row;
  };
  std::vector<Candidate> candidates;
  for (std::size_t r = 0; r < matrix_.n_datasets(); ++r) {
    if (!matrix_.has(r, col)) continue;
    const double sim = row_similarity(dense, matrix_.row(r),
                                      config_.similarity, config_.min_overlap);
    if (sim != 0.0) candidates.push_back(Candidate{sim, r});
  }

  if (candidates.empty()) {
    // Item-mean fallback over every row that rates the target.
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t r = 0; r < matrix_.n_datasets(); ++r) {
      if (matrix_.has(r, col)) {
        sum += matrix_.at(r, col);
        ++n;
      }
    }
    if (n == 0) return matrix_.scale().midpoint();
    return matrix_.scale().clamp(sum / static_cast<double>(n));
  }

  std::sort(candidates.begin(), candidates.end(),
            [this](const Candidate& a, const Candidate& b) {
              if (a.sim != b.sim) return a.sim > b.sim;
              return matrix_.datasets()[a.row] < matrix_.datasets()[b.row];
            });
  const std::size_t take =
      std::min(candidates.size(), static_cast<std::size_t>(config_.k));

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < take; ++i) {
    num += candidates[i].sim * matrix_.at(candidates[i].row, col);
    den += std::abs(candidates[i].sim);
  }
  return matrix_.scale().clamp(num / den);
}

std::map<AlgorithmId, double> NeighbourModel::predict_all_missing(
    const ActiveProfile& active) const {
  densify(active);  // validates the profile up front
  std::map<AlgorithmId, double> out;
  for (const auto& id : matrix_.algorithms()) {
    if (active.count(id) == 0) {
      out.emplace(id, predict(active, id));
    }
  }
  return out;
}

}  // namespace cf4cf
