#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace duskfcm {

/// Per-pixel feature vectors for one image: row k holds the features of
/// pixel k in row-major order, columns are named.
struct FeatureGrid {
  int width = 0;
  int height = 0;
  Eigen::MatrixXd values;  // (width*height) x d
  std::vector<std::string> names;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

/// Flat CSV dump: header row with feature names, then one row per pixel
/// (pixel index first).
void write_feature_csv(const FeatureGrid& grid, const std::filesystem::path& path);

}  // namespace duskfcm
