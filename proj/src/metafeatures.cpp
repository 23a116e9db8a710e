#include "cf4cf/metafeatures.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cf4cf {

double MetafeatureVector::value_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return values[i];
  }
  throw InvalidInput("unknown metafeature '" + name + "'");
}

namespace stats {

namespace {

void require_non_empty(std::span<const double> v) {
  if (v.empty()) throw InvalidInput("statistic of an empty vector");
}

// Central sample moments with n in the denominator.
struct Moments {
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
};

Moments central_moments(std::span<const double> v) {
  Moments m;
  const double n = static_cast<double>(v.size());
  for (double x : v) m.mean += x;
  m.mean /= n;
  for (double x : v) {
    const double d = x - m.mean;
    m.m2 += d * d;
    m.m3 += d * d * d;
    m.m4 += d * d * d * d;
  }
  m.m2 /= n;
  m.m3 /= n;
  m.m4 /= n;
  return m;
}

}  // namespace

double max(std::span<const double> v) {
  require_non_empty(v);
  return *std::max_element(v.begin(), v.end());
}

double min(std::span<const double> v) {
  require_non_empty(v);
  return *std::min_element(v.begin(), v.end());
}

double mean(std::span<const double> v) {
  require_non_empty(v);
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sum(std::span<const double> v) {
  require_non_empty(v);
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

double sd(std::span<const double> v) {
  require_non_empty(v);
  if (v.size() < 3) return 0.0;
  const double m = mean(v);
  double acc = 0.0;
  for (double x : v) acc += (x - m) * (x - m);
  acc /= static_cast<double>(v.size() - 1);
  return acc > 0.0 ? std::sqrt(acc) : 0.0;
}

double median(std::span<const double> v) {
  require_non_empty(v);
  std::vector<double> s(v.begin(), v.end());
  std::sort(s.begin(), s.end());
  const std::size_t n = s.size();
  if (n % 2 == 1) return s[n / 2];
  return 0.5 * (s[n / 2 - 1] + s[n / 2]);
}

double mode(std::span<const double> v) {
  require_non_empty(v);
  std::map<double, std::size_t> freq;
  for (double x : v) ++freq[x];
  double best = freq.begin()->first;
  std::size_t best_count = freq.begin()->second;
  for (const auto& [value, count] : freq) {
    if (count > best_count) {  // map order makes the smallest win ties
      best = value;
      best_count = count;
    }
  }
  return best;
}

double entropy(std::span<const double> v) {
  require_non_empty(v);
  std::map<double, std::size_t> freq;
  for (double x : v) ++freq[x];
  const double n = static_cast<double>(v.size());
  double h = 0.0;
  for (const auto& [value, count] : freq) {
    const double p = static_cast<double>(count) / n;
    h -= p * std::log(p);
  }
  return h;
}

double gini(std::span<const double> v) {
  require_non_empty(v);
  double total = 0.0;
  for (double x : v) {
    if (x < 0.0) throw InvalidInput("gini is defined for non-negative values only");
    total += x;
  }
  if (total == 0.0) return 0.0;
  // Mean absolute difference over the sorted vector in O(n log n):
  // sum_{i<j} (x_j - x_i) = sum_j x_j * (2j - n + 1) for 0-based sorted order.
  std::vector<double> s(v.begin(), v.end());
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double weighted = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    weighted += s[j] * (2.0 * static_cast<double>(j) - n + 1.0);
  }
  return weighted / (n * total);
}

double skewness(std::span<const double> v) {
  require_non_empty(v);
  if (v.size() < 3) return 0.0;
  const Moments m = central_moments(v);
  if (m.m2 == 0.0) return 0.0;
  return m.m3 / std::pow(m.m2, 1.5);
}

double kurtosis(std::span<const double> v) {
  require_non_empty(v);
  if (v.size() < 3) return 0.0;
  const Moments m = central_moments(v);
  if (m.m2 == 0.0) return 0.0;
  return m.m4 / (m.m2 * m.m2) - 3.0;
}

}  // namespace stats

namespace {

using StatFn = double (*)(std::span<const double>);

struct PostFunction {
  const char* name;
  StatFn fn;
};

constexpr PostFunction kPostFunctions[] = {
    {"max", stats::max},         {"min", stats::min},
    {"mean", stats::mean},       {"sd", stats::sd},
    {"median", stats::median},   {"mode", stats::mode},
    {"entropy", stats::entropy}, {"gini", stats::gini},
    {"skewness", stats::skewness}, {"kurtosis", stats::kurtosis},
};

struct GroupedValues {
  std::vector<double> counts;
  std::vector<double> means;
  std::vector<double> sums;
};

// Per-user or per-item aggregation, in sorted id order.
GroupedValues group_by(const BaseRatingMatrix& base, bool by_user) {
  const auto& ids = by_user ? base.users() : base.items();
  std::map<std::string, std::pair<double, std::size_t>> acc;  // id -> (sum, count)
  for (const auto& id : ids) acc.emplace(id, std::make_pair(0.0, 0));
  for (const auto& t : base.triples()) {
    auto& slot = acc[by_user ? t.user : t.item];
    slot.first += t.rating;
    slot.second += 1;
  }
  GroupedValues g;
  for (const auto& id : ids) {
    const auto& [total, count] = acc[id];
    g.counts.push_back(static_cast<double>(count));
    g.sums.push_back(total);
    g.means.push_back(count > 0 ? total / static_cast<double>(count) : 0.0);
  }
  return g;
}

void emit(MetafeatureVector& out, const std::string& prefix,
          std::span<const double> values) {
  for (const auto& pf : kPostFunctions) {
    out.names.push_back(prefix + "." + pf.name);
    out.values.push_back(pf.fn(values));
  }
}

}  // namespace

MetafeatureVector extract_systematic(const BaseRatingMatrix& base) {
  if (base.empty()) {
    throw InvalidInput("cannot characterize an empty rating matrix");
  }

  std::vector<double> all_ratings;
  all_ratings.reserve(base.n_ratings());
  for (const auto& t : base.triples()) all_ratings.push_back(t.rating);

  const GroupedValues users = group_by(base, /*by_user=*/true);
  const GroupedValues items = group_by(base, /*by_user=*/false);

  MetafeatureVector out;
  emit(out, "R.ratings", all_ratings);
  emit(out, "U.count", users.counts);
  emit(out, "U.mean", users.means);
  emit(out, "U.sum", users.sums);
  emit(out, "I.count", items.counts);
  emit(out, "I.mean", items.means);
  emit(out, "I.sum", items.sums);

  out.names.insert(out.names.end(), {"nusers", "nitems", "nratings", "sparsity"});
  out.values.push_back(static_cast<double>(base.n_users()));
  out.values.push_back(static_cast<double>(base.n_items()));
  out.values.push_back(static_cast<double>(base.n_ratings()));
  out.values.push_back(base.sparsity());
  return out;
}

const std::vector<std::string>& selected_metafeature_names() {
  static const std::vector<std::string> names = {
      "nusers",          "R.ratings.kurtosis", "R.ratings.sd",
      "I.count.kurtosis", "I.count.min",       "I.mean.entropy",
      "I.sum.skewness",   "U.sum.entropy",     "U.mean.min",
      "sparsity",         "U.sum.kurtosis",    "U.mean.skewness",
  };
  return names;
}

MetafeatureVector extract_selected(const BaseRatingMatrix& base) {
  const MetafeatureVector full = extract_systematic(base);
  MetafeatureVector out;
  for (const auto& name : selected_metafeature_names()) {
    out.names.push_back(name);
    out.values.push_back(full.value_of(name));
  }
  return out;
}

}  // namespace cf4cf
