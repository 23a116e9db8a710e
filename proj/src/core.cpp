#include "cf4cf/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cf4cf {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidInput(std::string(what) + " must be finite");
  }
}

}  // namespace

// --- RatingScale ------------------------------------------------------------

RatingScale::RatingScale(double lo, double hi) : min(lo), max(hi) {
  require_finite(lo, "scale minimum");
  require_finite(hi, "scale maximum");
  if (!(lo < hi)) {
    throw InvalidInput("rating scale requires min < max");
  }
}

double RatingScale::clamp(double r) const {
  return std::min(max, std::max(min, r));
}

// --- AlgoRanking ------------------------------------------------------------

AlgoRanking::AlgoRanking(std::vector<AlgorithmId> best_first)
    : ids_(std::move(best_first)) {
  if (ids_.empty()) {
    throw InvalidInput("ranking must not be empty");
  }
  std::set<AlgorithmId> seen;
  for (const auto& id : ids_) {
    if (id.empty()) {
      throw InvalidInput("ranking contains an empty algorithm id");
    }
    if (!seen.insert(id).second) {
      throw InvalidInput("ranking contains duplicate algorithm id '" + id + "'");
    }
  }
}

const AlgorithmId& AlgoRanking::at(std::size_t position) const {
  if (position < 1 || position > ids_.size()) {
    throw InvalidInput("ranking position out of range");
  }
  return ids_[position - 1];
}

std::size_t AlgoRanking::position(const AlgorithmId& id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return i + 1;
  }
  throw InvalidInput("algorithm '" + id + "' is not part of the ranking");
}

bool AlgoRanking::contains(const AlgorithmId& id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

AlgoRanking AlgoRanking::reversed() const {
  std::vector<AlgorithmId> rev(ids_.rbegin(), ids_.rend());
  return AlgoRanking(std::move(rev));
}

// --- PerformanceTable -------------------------------------------------------

void PerformanceTable::insert_sorted(std::vector<std::string>& v,
                                     const std::string& s) {
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s) v.insert(it, s);
}

void PerformanceTable::add(const DatasetId& dataset, const AlgorithmId& algorithm,
                           const std::string& measure, double score) {
  if (dataset.empty() || algorithm.empty() || measure.empty()) {
    throw InvalidInput("dataset, algorithm and measure ids must be non-empty");
  }
  require_finite(score, "score");
  auto key = std::make_tuple(dataset, measure, algorithm);
  if (!cells_.emplace(std::move(key), score).second) {
    throw DuplicateEntry("duplicate score for (" + dataset + ", " + algorithm +
                         ", " + measure + ")");
  }
  insert_sorted(datasets_, dataset);
  insert_sorted(algorithms_, algorithm);
  insert_sorted(measures_, measure);
}

std::optional<double> PerformanceTable::find(const DatasetId& dataset,
                                             const AlgorithmId& algorithm,
                                             const std::string& measure) const {
  auto it = cells_.find(std::make_tuple(dataset, measure, algorithm));
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

std::map<AlgorithmId, double> PerformanceTable::scores(
    const DatasetId& dataset, const std::string& measure) const {
  std::map<AlgorithmId, double> out;
  std::vector<AlgorithmId> missing;
  for (const auto& a : algorithms_) {
    if (auto v = find(dataset, a, measure)) {
      out.emplace(a, *v);
    } else {
      missing.push_back(a);
    }
  }
  if (out.empty() || !missing.empty()) {
    std::ostringstream msg;
    msg << "dataset '" << dataset << "' lacks scores under measure '" << measure
        << "' for:";
    for (const auto& a : missing) msg << ' ' << a;
    if (out.empty() && missing.empty()) msg << " (empty table)";
    throw IncompleteTable(msg.str());
  }
  return out;
}

std::vector<PerformanceTable::Entry> PerformanceTable::entries() const {
  std::vector<Entry> out;
  out.reserve(cells_.size());
  for (const auto& [key, score] : cells_) {
    out.push_back(Entry{std::get<0>(key), std::get<2>(key), std::get<1>(key), score});
  }
  return out;
}

void PerformanceTable::validate_complete() const {
  for (const auto& d : datasets_) {
    for (const auto& m : measures_) {
      scores(d, m);  // throws IncompleteTable on any gap
    }
  }
}

PerformanceTable PerformanceTable::without(const DatasetId& dataset) const {
  PerformanceTable out;
  for (const auto& [key, score] : cells_) {
    if (std::get<0>(key) == dataset) continue;
    out.add(std::get<0>(key), std::get<2>(key), std::get<1>(key), score);
  }
  return out;
}

// --- BaseRatingMatrix -------------------------------------------------------

BaseRatingMatrix::BaseRatingMatrix(std::vector<std::string> users,
                                   std::vector<std::string> items)
    : users_(std::move(users)), items_(std::move(items)) {
  std::sort(users_.begin(), users_.end());
  users_.erase(std::unique(users_.begin(), users_.end()), users_.end());
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

void BaseRatingMatrix::add(const std::string& user, const std::string& item,
                           double rating) {
  if (user.empty() || item.empty()) {
    throw InvalidInput("user and item ids must be non-empty");
  }
  require_finite(rating, "rating");
  if (!seen_.emplace(user, item).second) {
    throw DuplicateEntry("duplicate rating for (" + user + ", " + item + ")");
  }
  triples_.push_back(Triple{user, item, rating});
  auto ins = [](std::vector<std::string>& v, const std::string& s) {
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || *it != s) v.insert(it, s);
  };
  ins(users_, user);
  ins(items_, item);
}

double BaseRatingMatrix::sparsity() const {
  if (users_.empty() || items_.empty()) return 0.0;
  const double cells = static_cast<double>(users_.size()) *
                       static_cast<double>(items_.size());
  return 1.0 - static_cast<double>(triples_.size()) / cells;
}

// --- MetaRatingMatrix -------------------------------------------------------

MetaRatingMatrix::MetaRatingMatrix(std::vector<DatasetId> datasets,
                                   std::vector<AlgorithmId> algorithms,
                                   RatingScale scale)
    : datasets_(std::move(datasets)),
      algorithms_(std::move(algorithms)),
      scale_(scale) {
  if (datasets_.empty() || algorithms_.empty()) {
    throw InvalidInput("meta rating matrix needs at least one dataset and one algorithm");
  }
  auto check_unique = [](const auto& v, const char* what) {
    std::set<std::string> seen(v.begin(), v.end());
    if (seen.size() != v.size()) {
      throw InvalidInput(std::string("duplicate ") + what + " id in meta rating matrix");
    }
  };
  check_unique(datasets_, "dataset");
  check_unique(algorithms_, "algorithm");
  values_.assign(datasets_.size() * algorithms_.size(), kMissing);
}

void MetaRatingMatrix::set(std::size_t row, std::size_t col, double rating) {
  if (row >= datasets_.size() || col >= algorithms_.size()) {
    throw InvalidInput("meta rating matrix index out of range");
  }
  require_finite(rating, "rating");
  if (!scale_.contains(rating)) {
    throw InvalidInput("rating outside the declared scale");
  }
  values_[row * algorithms_.size() + col] = rating;
}

bool MetaRatingMatrix::has(std::size_t row, std::size_t col) const {
  return !std::isnan(values_[row * algorithms_.size() + col]);
}

double MetaRatingMatrix::at(std::size_t row, std::size_t col) const {
  return values_[row * algorithms_.size() + col];
}

std::span<const double> MetaRatingMatrix::row(std::size_t r) const {
  return {values_.data() + r * algorithms_.size(), algorithms_.size()};
}

std::size_t MetaRatingMatrix::row_rating_count(std::size_t r) const {
  std::size_t n = 0;
  for (double v : row(r)) {
    if (!std::isnan(v)) ++n;
  }
  return n;
}

std::size_t MetaRatingMatrix::rating_count() const {
  std::size_t n = 0;
  for (double v : values_) {
    if (!std::isnan(v)) ++n;
  }
  return n;
}

std::optional<std::size_t> MetaRatingMatrix::dataset_index(const DatasetId& id) const {
  for (std::size_t i = 0; i < datasets_.size(); ++i) {
    if (datasets_[i] == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> MetaRatingMatrix::algorithm_index(const AlgorithmId& id) const {
  for (std::size_t i = 0; i < algorithms_.size(); ++i) {
    if (algorithms_[i] == id) return i;
  }
  return std::nullopt;
}

void MetaRatingMatrix::validate() const {
  for (std::size_t r = 0; r < datasets_.size(); ++r) {
    if (row_rating_count(r) == 0) {
      throw InvalidInput("dataset row '" + datasets_[r] + "' has no ratings");
    }
  }
}

// --- conversions ------------------------------------------------------------

AlgoRanking ranking_from_scores(const std::map<AlgorithmId, double>& scores) {
  if (scores.empty()) {
    throw InvalidInput("cannot rank an empty score map");
  }
  std::vector<std::pair<AlgorithmId, double>> items(scores.begin(), scores.end());
  for (const auto& [id, score] : items) {
    if (!std::isfinite(score)) {
      throw InvalidInput("score for '" + id + "' is not finite");
    }
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<AlgorithmId> ids;
  ids.reserve(items.size());
  for (auto& [id, score] : items) ids.push_back(std::move(id));
  return AlgoRanking(std::move(ids));
}

double rank_position_to_rating(std::size_t position, std::size_t count,
                               const RatingScale& scale) {
  if (count < 2) {
    throw InvalidInput("rank-to-rating conversion needs at least two algorithms");
  }
  if (position < 1 || position > count) {
    throw InvalidInput("rank position out of range");
  }
  // Endpoints returned exactly; the linear interpolation could drift in the
  // last bit for awkward scales.
  if (position == 1) return scale.max;
  if (position == count) return scale.min;
  return scale.span() * static_cast<double>(count - position) /
             static_cast<double>(count - 1) +
         scale.min;
}

std::map<AlgorithmId, double> ranking_to_ratings(const AlgoRanking& ranking,
                                                 const RatingScale& scale) {
  const std::size_t m = ranking.size();
  if (m < 2) {
    throw InvalidInput("rank-to-rating conversion needs at least two algorithms");
  }
  std::map<AlgorithmId, double> out;
  for (std::size_t j = 1; j <= m; ++j) {
    out.emplace(ranking.at(j), rank_position_to_rating(j, m, scale));
  }
  return out;
}

AlgoRanking ratings_to_ranking(const std::map<AlgorithmId, double>& ratings) {
  if (ratings.empty()) {
    throw InvalidInput("cannot rank an empty rating map");
  }
  std::vector<std::pair<AlgorithmId, double>> items(ratings.begin(), ratings.end());
  for (const auto& [id, rating] : items) {
    if (!std::isfinite(rating)) {
      throw InvalidInput("rating for '" + id + "' is not finite");
    }
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<AlgorithmId> ids;
  ids.reserve(items.size());
  for (auto& [id, rating] : items) ids.push_back(std::move(id));
  return AlgoRanking(std::move(ids));
}

}  // namespace cf4cf
