#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "duskfcm/errors.hpp"
#include "duskfcm/feature_grid.hpp"
#include "duskfcm/image.hpp"

namespace duskfcm {

struct GlcmConfig {
  int levels = 8;
  std::vector<std::array<int, 2>> offsets = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};  // (dx, dy)
  bool symmetric = true;
  int window = 11;  // odd side length of the per-pixel window; 0 = global only
};

/// Normalized gray-level co-occurrence matrix for one offset.
struct Glcm {
  Eigen::MatrixXd p;       // levels x levels, entries sum to 1
  double pair_count = 0;   // pairs counted, transpose included when symmetric
};

inline constexpr int kTextureFeatureCount = 22;
using TextureFeatures = Eigen::Matrix<double, kTextureFeatureCount, 1>;

/// Fixed column order of the texture descriptor; index -> name is part of
/// the public contract.
const std::vector<std::string>& texture_feature_names();

/// Counts all in-bounds pixel pairs (p, p + offset); adds the transposed
/// counts when cfg.symmetric; normalizes by the total pair count.
Glcm compute_glcm(const QuantizedImage& img, const GlcmConfig& cfg, int offset_index);

/// The 22 statistics of a normalized GLCM, in texture_feature_names() order.
/// Entropies use natural log with 0*log 0 := 0. When a marginal standard
/// deviation is zero the correlation-type features are defined as 0.
TextureFeatures texture_features(const Glcm& glcm);
TextureFeatures texture_features(const Eigen::Ref<const Eigen::MatrixXd>& p);

/// Element-wise mean over per-offset descriptors.
TextureFeatures average_over_offsets(const std::vector<TextureFeatures>& per_offset);

/// Per-pixel descriptor of the GLCM computed over the cfg.window square
/// centered at each pixel, edge-replicated, averaged over cfg.offsets.
FeatureGrid windowed_texture_map(const QuantizedImage& img, const GlcmConfig& cfg, int jobs = 0);

}  // namespace duskfcm
