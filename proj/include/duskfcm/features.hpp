#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "duskfcm/errors.hpp"
#include "duskfcm/feature_grid.hpp"

namespace duskfcm {

/// Per-pixel fused feature vectors; the clustering input.
struct FeatureMatrix {
  Eigen::MatrixXd values;  // n x d
  std::vector<std::string> names;

  Eigen::Index n() const { return values.rows(); }
  Eigen::Index d() const { return values.cols(); }
};

struct SelectionResult {
  std::vector<int> selected;  // ascending column indices
  double merit = 0.0;
};

/// Row-wise concatenation: color columns first, then texture columns.
FeatureMatrix fuse(const FeatureGrid& color, const FeatureGrid& texture);

/// Column-wise standardization with population std; zero-variance columns
/// map to all-zeros.
FeatureMatrix zscore(const FeatureMatrix& fm);

FeatureMatrix select_columns(const FeatureMatrix& fm, const std::vector<int>& columns);

/// CFS merit of a subset given |r(feature, class)| and |r(feature, feature)|:
///   M(S) = k * mean|r_fc| / sqrt(k + k(k-1) * mean|r_ff|)
double cfs_merit(const std::vector<int>& subset, const Eigen::VectorXd& abs_r_fc,
                 const Eigen::MatrixXd& abs_r_ff);

/// Greedy best-first subset search over precomputed correlations; stops
/// after 5 consecutive expansions that fail to improve the best merit.
SelectionResult cfs_search(const Eigen::VectorXd& abs_r_fc, const Eigen::MatrixXd& abs_r_ff);

/// Correlation-based feature selection against binary labels. Pearson
/// correlation throughout (point-biserial against the class); zero-variance
/// correlations are defined as 0.
SelectionResult cfs_select(const FeatureMatrix& fm, const std::vector<int>& labels);

/// Streaming accumulator for the correlation inputs of cfs_search, so a
/// whole dataset can be calibrated without holding every pixel row.
class CorrelationAccumulator {
 public:
  explicit CorrelationAccumulator(int d);

  void add(const Eigen::Ref<const Eigen::MatrixXd>& rows, const std::vector<int>& labels);

  Eigen::VectorXd abs_class_correlation() const;
  Eigen::MatrixXd abs_feature_correlation() const;
  std::int64_t count() const { return n_; }
  bool both_classes_seen() const;

 private:
  std::int64_t n_ = 0;
  Eigen::VectorXd sum_x_;
  Eigen::MatrixXd sum_xx_;
  Eigen::VectorXd sum_xy_;
  double sum_y_ = 0.0;
};

}  // namespace duskfcm
