#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cf4cf/errors.hpp"

namespace cf4cf {

using AlgorithmId = std::string;
using DatasetId = std::string;

// Closed rating interval [min, max].
struct RatingScale {
  double min = 1.0;
  double max = 5.0;

  RatingScale() = default;
  RatingScale(double lo, double hi);

  double midpoint() const { return 0.5 * (min + max); }
  double span() const { return max - min; }
  double clamp(double r) const;
  bool contains(double r) const { return r >= min && r <= max; }

  friend bool operator==(const RatingScale&, const RatingScale&) = default;
};

// Total order over an algorithm set, best first.
class AlgoRanking {
 public:
  explicit AlgoRanking(std::vector<AlgorithmId> best_first);

  const std::vector<AlgorithmId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }

  // 1-based accessors; `position` throws InvalidInput for unknown ids.
  const AlgorithmId& at(std::size_t position) const;
  std::size_t position(const AlgorithmId& id) const;
  bool contains(const AlgorithmId& id) const;

  AlgoRanking reversed() const;

  friend bool operator==(const AlgoRanking&, const AlgoRanking&) = default;

 private:
  std::vector<AlgorithmId> ids_;
};

// dataset x algorithm x measure -> score. Stored sparsely; completeness per
// measure is validated by the operations that require it.
class PerformanceTable {
 public:
  struct Entry {
    DatasetId dataset;
    AlgorithmId algorithm;
    std::string measure;
    double score;
  };

  void add(const DatasetId& dataset, const AlgorithmId& algorithm,
           const std::string& measure, double score);

  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }

  const std::vector<DatasetId>& datasets() const { return datasets_; }
  const std::vector<AlgorithmId>& algorithms() const { return algorithms_; }
  const std::vector<std::string>& measures() const { return measures_; }

  std::optional<double> find(const DatasetId& dataset,
                             const AlgorithmId& algorithm,
                             const std::string& measure) const;

  // Scores of every algorithm for (dataset, measure); throws IncompleteTable
  // when any algorithm of the declared universe is missing.
  std::map<AlgorithmId, double> scores(const DatasetId& dataset,
                                       const std::string& measure) const;

  // Entries in canonical (dataset, measure, algorithm) order.
  std::vector<Entry> entries() const;

  // Checks that every dataset covers the full algorithm set for every
  // declared measure.
  void validate_complete() const;

  // Copy with every row of one dataset removed.
  PerformanceTable without(const DatasetId& dataset) const;

  friend bool operator==(const PerformanceTable&, const PerformanceTable&) = default;

 private:
  static void insert_sorted(std::vector<std::string>& v, const std::string& s);

  std::map<std::tuple<DatasetId, std::string, AlgorithmId>, double> cells_;
  std::vector<DatasetId> datasets_;
  std::vector<AlgorithmId> algorithms_;
  std::vector<std::string> measures_;
};

// Performance estimates computed on data subsamples share the schema of the
// full-data table.
using LandmarkTable = PerformanceTable;

// Sparse user x item x rating triples of one baselevel dataset. The user and
// item universes are inherited on subsampling, so they may be larger than
// what the stored triples mention.
class BaseRatingMatrix {
 public:
  struct Triple {
    std::string user;
    std::string item;
    double rating;

    friend bool operator==(const Triple&, const Triple&) = default;
  };

  BaseRatingMatrix() = default;
  BaseRatingMatrix(std::vector<std::string> users, std::vector<std::string> items);

  void add(const std::string& user, const std::string& item, double rating);

  const std::vector<Triple>& triples() const { return triples_; }
  const std::vector<std::string>& users() const { return users_; }
  const std::vector<std::string>& items() const { return items_; }

  std::size_t n_users() const { return users_.size(); }
  std::size_t n_items() const { return items_.size(); }
  std::size_t n_ratings() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  double sparsity() const;

 private:
  std::vector<Triple> triples_;
  std::set<std::pair<std::string, std::string>> seen_;
  std::vector<std::string> users_;
  std::vector<std::string> items_;
};

// dataset x algorithm ratings on a fixed scale; entries may be missing.
class MetaRatingMatrix {
 public:
  MetaRatingMatrix(std::vector<DatasetId> datasets,
                   std::vector<AlgorithmId> algorithms, RatingScale scale);

  std::size_t n_datasets() const { return datasets_.size(); }
  std::size_t n_algorithms() const { return algorithms_.size(); }
  const std::vector<DatasetId>& datasets() const { return datasets_; }
  const std::vector<AlgorithmId>& algorithms() const { return algorithms_; }
  const RatingScale& scale() const { return scale_; }

  void set(std::size_t row, std::size_t col, double rating);
  bool has(std::size_t row, std::size_t col) const;
  double at(std::size_t row, std::size_t col) const;  // NaN when missing

  // One dataset row aligned with `algorithms()`; NaN marks missing entries.
  std::span<const double> row(std::size_t r) const;
  std::size_t row_rating_count(std::size_t r) const;
  std::size_t rating_count() const;

  std::optional<std::size_t> dataset_index(const DatasetId& id) const;
  std::optional<std::size_t> algorithm_index(const AlgorithmId& id) const;

  // Every row must carry at least one rating.
  void validate() const;

 private:
  std::vector<DatasetId> datasets_;
  std::vector<AlgorithmId> algorithms_;
  std::vector<double> values_;  // row-major, NaN = missing
  RatingScale scale_;
};

// --- rank <-> rating conversions -------------------------------------------

// Sorts algorithms by decreasing score; equal scores fall back to
// lexicographic id order.
AlgoRanking ranking_from_scores(const std::map<AlgorithmId, double>& scores);

// Linear map of rank position j in [1, count] onto the rating scale: the top
// position lands exactly on scale.max, the bottom on scale.min.
double rank_position_to_rating(std::size_t position, std::size_t count,
                               const RatingScale& scale);

std::map<AlgorithmId, double> ranking_to_ratings(const AlgoRanking& ranking,
                                                 const RatingScale& scale);

// Inverse direction: higher rating means better rank; equal ratings fall back
// to lexicographic id order.
AlgoRanking ratings_to_ranking(const std::map<AlgorithmId, double>& ratings);

}  // namespace cf4cf
