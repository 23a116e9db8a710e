#pragma once

#include <span>
#include <string>
#include <vector>

#include "cf4cf/core.hpp"

namespace cf4cf {

// Named numeric characterization of one baselevel dataset. Names follow the
// object.function.post-function convention (R.ratings.kurtosis, U.count.mean,
// ...) plus the four global counts nusers, nitems, nratings, sparsity.
struct MetafeatureVector {
  std::vector<std::string> names;
  std::vector<double> values;

  std::size_t size() const { return names.size(); }
  double value_of(const std::string& name) const;  // throws InvalidInput
};

namespace stats {

// All kernels require a non-empty input vector.
double max(std::span<const double> v);
double min(std::span<const double> v);
double mean(std::span<const double> v);
double sum(std::span<const double> v);
// Sample standard deviation; 0 for fewer than three values or zero variance.
double sd(std::span<const double> v);
double median(std::span<const double> v);
// Most frequent value, smallest on ties. Values are bucketed by exact
// equality.
double mode(std::span<const double> v);
// Shannon entropy (natural log) of the empirical distribution of distinct
// values.
double entropy(std::span<const double> v);
// Gini coefficient via mean absolute difference; rejects negative inputs.
double gini(std::span<const double> v);
// Moment-based sample skewness g1; 0 for fewer than three values or zero
// variance.
double skewness(std::span<const double> v);
// Excess kurtosis g2; 0 for fewer than three values or zero variance.
double kurtosis(std::span<const double> v);

}  // namespace stats

// The full systematic set: the ten post-functions over R.ratings and over
// {U, I} x {count, mean, sum}, plus nusers, nitems, nratings and sparsity.
// 74 values in total.
MetafeatureVector extract_systematic(const BaseRatingMatrix& base);

// The 12-feature state-of-the-art subset, in its fixed order.
MetafeatureVector extract_selected(const BaseRatingMatrix& base);

const std::vector<std::string>& selected_metafeature_names();

}  // namespace cf4cf
