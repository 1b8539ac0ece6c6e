#include "duskfcm/features.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace duskfcm {

FeatureMatrix fuse(const FeatureGrid& color, const FeatureGrid& texture) {
  if (color.width != texture.width || color.height != texture.height)
    throw DimensionMismatch("fuse: feature grids describe different image sizes");
  FeatureMatrix fm;
  fm.values.resize(color.rows(), color.cols() + texture.cols());
  fm.values << color.values, texture.values;
  fm.names = color.names;
  fm.names.insert(fm.names.end(), texture.names.begin(), texture.names.end());
  return fm;
}

FeatureMatrix zscore(const FeatureMatrix& fm) {
  const Eigen::Index n = fm.n();
  if (n < 2) throw BadConfig("zscore: need at least 2 rows");
  FeatureMatrix out;
  out.names = fm.names;
  out.values.resize(n, fm.d());
  for (Eigen::Index j = 0; j < fm.d(); ++j) {
    const double mean = fm.values.col(j).mean();
    const double var = (fm.values.col(j).array() - mean).square().sum() / static_cast<double>(n);
    if (var > 0.0) {
      out.values.col(j) = (fm.values.col(j).array() - mean) / std::sqrt(var);
    } else {
      out.values.col(j).setZero();
    }
  }
  return out;
}

FeatureMatrix select_columns(const FeatureMatrix& fm, const std::vector<int>& columns) {
  FeatureMatrix out;
  out.values.resize(fm.n(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const int c = columns[i];
    if (c < 0 || c >= fm.d()) throw BadConfig("select_columns: column index out of range");
    out.values.col(static_cast<Eigen::Index>(i)) = fm.values.col(c);
    out.names.push_back(fm.names[c]);
  }
  return out;
}

double cfs_merit(const std::vector<int>& subset, const Eigen::VectorXd& abs_r_fc,
                 const Eigen::MatrixXd& abs_r_ff) {
  const double k = static_cast<double>(subset.size());
  if (subset.empty()) return 0.0;
  double sum_fc = 0.0;
  for (int f : subset) sum_fc += abs_r_fc[f];
  const double mean_fc = sum_fc / k;
  double mean_ff = 0.0;
  if (subset.size() > 1) {
    double sum_ff = 0.0;
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = a + 1; b < subset.size(); ++b) sum_ff += abs_r_ff(subset[a], subset[b]);
    mean_ff = sum_ff / (k * (k - 1.0) / 2.0);
  }
  return k * mean_fc / std::sqrt(k + k * (k - 1.0) * mean_ff);
}

namespace {

struct SearchNode {
  double merit;
  std::vector<int> subset;  // sorted ascending
};

struct NodeOrder {
  // Highest merit first; deterministic tie-break on size then indices.
  bool operator()(const SearchNode& a, const SearchNode& b) const {
    if (a.merit != b.merit) return a.merit < b.merit;
    if (a.subset.size() != b.subset.size()) return a.subset.size() > b.subset.size();
    return a.subset > b.subset;
  }
};

}  // namespace

SelectionResult cfs_search(const Eigen::VectorXd& abs_r_fc, const Eigen::MatrixXd& abs_r_ff) {
  const int d = static_cast<int>(abs_r_fc.size());
  std::priority_queue<SearchNode, std::vector<SearchNode>, NodeOrder> open;
  std::set<std::vector<int>> seen;

  SearchNode root{0.0, {}};
  open.push(root);
  seen.insert(root.subset);

  std::vector<int> best_subset;
  double best_merit = -std::numeric_limits<double>::infinity();
  int stale = 0;
  constexpr int kMaxStale = 5;

  while (!open.empty() && stale < kMaxStale) {
    const SearchNode node = open.top();
    open.pop();
    bool improved = false;
    for (int f = 0; f < d; ++f) {
      if (std::binary_search(node.subset.begin(), node.subset.end(), f)) continue;
      std::vector<int> child = node.subset;
      child.insert(std::lower_bound(child.begin(), child.end(), f), f);
      if (!seen.insert(child).second) continue;
      const double merit = cfs_merit(child, abs_r_fc, abs_r_ff);
      // Strict improvement keeps ties resolved toward earlier (lower-index)
      // expansions.
      if (merit > best_merit) {
        best_merit = merit;
        best_subset = child;
        improved = true;
      }
      open.push(SearchNode{merit, std::move(child)});
    }
    stale = improved ? 0 : stale + 1;
  }

  SelectionResult result;
  result.selected = best_subset;
  result.merit = best_merit;
  return result;
}

SelectionResult cfs_select(const FeatureMatrix& fm, const std::vector<int>& labels) {
  if (static_cast<Eigen::Index>(labels.size()) != fm.n())
    throw DimensionMismatch("cfs_select: label count != row count");
  if (fm.n() < 2) throw BadConfig("cfs_select: need at least 2 rows");
  CorrelationAccumulator acc(static_cast<int>(fm.d()));
  acc.add(fm.values, labels);
  if (!acc.both_classes_seen()) throw SingleClassLabels("cfs_select: labels are a single class");
  return cfs_search(acc.abs_class_correlation(), acc.abs_feature_correlation());
}

CorrelationAccumulator::CorrelationAccumulator(int d)
    : sum_x_(Eigen::VectorXd::Zero(d)),
      sum_xx_(Eigen::MatrixXd::Zero(d, d)),
      sum_xy_(Eigen::VectorXd::Zero(d)) {}

void CorrelationAccumulator::add(const Eigen::Ref<const Eigen::MatrixXd>& rows,
                                 const std::vector<int>& labels) {
  if (rows.cols() != sum_x_.size())
    throw DimensionMismatch("CorrelationAccumulator: column count mismatch");
  if (static_cast<Eigen::Index>(labels.size()) != rows.rows())
    throw DimensionMismatch("CorrelationAccumulator: label count mismatch");
  Eigen::VectorXd y(rows.rows());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) y[i] = labels[i] ? 1.0 : 0.0;
  n_ += rows.rows();
  sum_x_ += rows.colwise().sum().transpose();
  sum_xx_ += rows.transpose() * rows;
  sum_xy_ += rows.transpose() * y;
  sum_y_ += y.sum();
}

bool CorrelationAccumulator::both_classes_seen() const {
  return sum_y_ > 0.0 && sum_y_ < static_cast<double>(n_);
}

Eigen::VectorXd CorrelationAccumulator::abs_class_correlation() const {
  const double n = static_cast<double>(n_);
  const Eigen::VectorXd mean_x = sum_x_ / n;
  const double mean_y = sum_y_ / n;
  const double var_y = sum_y_ / n - mean_y * mean_y;  // y is 0/1, sum y^2 = sum y
  Eigen::VectorXd r(sum_x_.size());
  for (Eigen::Index j = 0; j < r.size(); ++j) {
    const double var_x = sum_xx_(j, j) / n - mean_x[j] * mean_x[j];
    const double cov = sum_xy_[j] / n - mean_x[j] * mean_y;
    const double denom = std::sqrt(std::max(0.0, var_x) * std::max(0.0, var_y));
    r[j] = denom > 0.0 ? std::abs(cov / denom) : 0.0;
  }
  return r;
}

Eigen::MatrixXd CorrelationAccumulator::abs_feature_correlation() const {
  const double n = static_cast<double>(n_);
  const Eigen::VectorXd mean_x = sum_x_ / n;
  Eigen::MatrixXd r(sum_x_.size(), sum_x_.size());
  for (Eigen::Index a = 0; a < r.rows(); ++a) {
    r(a, a) = 1.0;
    const double var_a = sum_xx_(a, a) / n - mean_x[a] * mean_x[a];
    for (Eigen::Index b = a + 1; b < r.cols(); ++b) {
      const double var_b = sum_xx_(b, b) / n - mean_x[b] * mean_x[b];
      const double cov = sum_xx_(a, b) / n - mean_x[a] * mean_x[b];
      const double denom = std::sqrt(std::max(0.0, var_a) * std::max(0.0, var_b));
      const double v = denom > 0.0 ? std::abs(cov / denom) : 0.0;
      r(a, b) = v;
      r(b, a) = v;
    }
  }
  return r;
}

}  // namespace duskfcm
