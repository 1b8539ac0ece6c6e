#include "duskfcm/colorfeat.hpp"

#include <algorithm>
#include <cmath>

#include "duskfcm/parallel.hpp"

namespace duskfcm {

ChannelHistogram channel_histogram(const RgbImage& img, int channel, int bin_count) {
  if (channel < 0 || channel > 2) throw BadConfig("channel_histogram: channel must be 0, 1 or 2");
  if (bin_count < 1 || 256 % bin_count != 0)
    throw BadBinCount("channel_histogram: bin count must divide 256");
  ChannelHistogram h;
  h.channel = channel;
  h.bin_count = bin_count;
  h.bins.assign(bin_count, 0);
  const int width_per_bin = 256 / bin_count;
  const std::size_t n = img.pixels();
  for (std::size_t i = 0; i < n; ++i) h.bins[img.data[3 * i + channel] / width_per_bin] += 1;
  return h;
}

const std::vector<std::string>& color_feature_names() {
  static const std::vector<std::string> names = {
      "R", "G", "B", "mean_R", "mean_G", "mean_B", "std_R", "std_G", "std_B",
  };
  return names;
}

FeatureGrid color_feature_map(const RgbImage& img, int window, int jobs) {
  if (window < 1 || window % 2 == 0) throw BadConfig("color_feature_map: window must be odd >= 1");
  if (window > img.width || window > img.height)
    throw WindowLargerThanImage("color_feature_map: window exceeds image size");

  FeatureGrid grid;
  grid.width = img.width;
  grid.height = img.height;
  grid.names = color_feature_names();
  grid.values.resize(static_cast<Eigen::Index>(img.pixels()), kColorFeatureCount);

  const int r = window / 2;
  const int w = img.width, h = img.height;
  const double count = static_cast<double>(window) * window;

  parallel_for(static_cast<std::size_t>(h), jobs, [&](std::size_t row) {
    const int cy = static_cast<int>(row);
    for (int cx = 0; cx < w; ++cx) {
      // Integer moments keep the std exactly 0 on constant windows.
      std::int64_t sum[3] = {0, 0, 0};
      std::int64_t sum_sq[3] = {0, 0, 0};
      for (int wy = cy - r; wy <= cy + r; ++wy) {
        const int sy = std::clamp(wy, 0, h - 1);
        for (int wx = cx - r; wx <= cx + r; ++wx) {
          const int sx = std::clamp(wx, 0, w - 1);
          for (int ch = 0; ch < 3; ++ch) {
            const std::int64_t v = img.at(sx, sy, ch);
            sum[ch] += v;
            sum_sq[ch] += v * v;
          }
        }
      }
      const Eigen::Index idx = static_cast<Eigen::Index>(cy) * w + cx;
      for (int ch = 0; ch < 3; ++ch) {
        const double mean = static_cast<double>(sum[ch]) / count;
        const double var =
            std::max(0.0, static_cast<double>(sum_sq[ch]) / count - mean * mean);
        grid.values(idx, ch) = img.at(cx, cy, ch) / 255.0;
        grid.values(idx, 3 + ch) = mean / 255.0;
        grid.values(idx, 6 + ch) = std::sqrt(var) / 255.0;
      }
    }
  });
  return grid;
}

}  // namespace duskfcm
