#pragma once

#include <cstdint>
#include <vector>

#include "duskfcm/errors.hpp"
#include "duskfcm/feature_grid.hpp"
#include "duskfcm/image.hpp"

namespace duskfcm {

inline constexpr int kColorFeatureCount = 9;

struct ChannelHistogram {
  int channel = 0;  // 0 = R, 1 = G, 2 = B
  int bin_count = 0;
  std::vector<std::int64_t> bins;
};

/// Histogram of one RGB band; bin_count must divide 256. bins[i] counts
/// pixels with channel value in [i*256/bin_count, (i+1)*256/bin_count).
ChannelHistogram channel_histogram(const RgbImage& img, int channel, int bin_count);

const std::vector<std::string>& color_feature_names();

/// Per-pixel color descriptor: (R,G,B)/255 plus windowed mean and
/// population standard deviation per channel, replicate-padded edges.
FeatureGrid color_feature_map(const RgbImage& img, int window, int jobs = 0);

}  // namespace duskfcm
