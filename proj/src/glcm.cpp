#include "duskfcm/glcm.hpp"

#include <algorithm>
#include <cmath>

#include "duskfcm/parallel.hpp"

namespace duskfcm {

namespace {

void validate_levels(const QuantizedImage& img, int levels) {
  if (levels < 2) throw BadConfig("glcm: levels must be >= 2");
  for (auto v : img.data)
    if (v >= levels) throw BadConfig("glcm: image value >= configured level count");
}

// Scratch buffers reused across per-pixel feature evaluations.
struct FeatureScratch {
  Eigen::VectorXd px, py, p_sum, p_diff;
  void ensure(Eigen::Index levels) {
    if (px.size() != levels) {
      px.resize(levels);
      py.resize(levels);
      p_sum.resize(2 * levels - 1);
      p_diff.resize(levels);
    }
  }
};

double vector_entropy(const Eigen::VectorXd& v) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] > 0.0) h -= v[i] * std::log(v[i]);
  return h;
}

void features_from(const Eigen::Ref<const Eigen::MatrixXd>& p, FeatureScratch& s,
                   TextureFeatures& f) {
  const Eigen::Index L = p.rows();
  s.ensure(L);
  s.px = p.rowwise().sum();
  s.py = p.colwise().sum().transpose();
  s.p_sum.setZero();
  s.p_diff.setZero();

  double mu_x = 0.0, mu_y = 0.0;
  for (Eigen::Index i = 0; i < L; ++i) {
    mu_x += static_cast<double>(i) * s.px[i];
    mu_y += static_cast<double>(i) * s.py[i];
  }
  double var_x = 0.0, var_y = 0.0;
  for (Eigen::Index i = 0; i < L; ++i) {
    var_x += (i - mu_x) * (i - mu_x) * s.px[i];
    var_y += (i - mu_y) * (i - mu_y) * s.py[i];
  }
  const double sigma_x = std::sqrt(var_x);
  const double sigma_y = std::sqrt(var_y);

  double autocorr = 0.0, contrast = 0.0, cov = 0.0, prominence = 0.0, shade = 0.0;
  double dissimilarity = 0.0, energy = 0.0, entropy = 0.0, homog1 = 0.0, homog2 = 0.0;
  double max_p = 0.0, hxy1 = 0.0, hxy2 = 0.0, idn = 0.0, idmn = 0.0;
  const double dL = static_cast<double>(L);

  for (Eigen::Index i = 0; i < L; ++i) {
    for (Eigen::Index j = 0; j < L; ++j) {
      const double v = p(i, j);
      const double di = static_cast<double>(i);
      const double dj = static_cast<double>(j);
      const double diff = di - dj;
      const double adiff = std::abs(diff);

      s.p_sum[i + j] += v;
      s.p_diff[static_cast<Eigen::Index>(adiff)] += v;

      autocorr += di * dj * v;
      contrast += diff * diff * v;
      cov += (di - mu_x) * (dj - mu_y) * v;
      const double t = di + dj - mu_x - mu_y;
      const double t2 = t * t;
      prominence += t2 * t2 * v;
      shade += t2 * t * v;
      dissimilarity += adiff * v;
      energy += v * v;
      homog1 += v / (1.0 + adiff);
      homog2 += v / (1.0 + diff * diff);
      idn += v / (1.0 + adiff / dL);
      idmn += v / (1.0 + diff * diff / (dL * dL));
      max_p = std::max(max_p, v);
      if (v > 0.0) {
        entropy -= v * std::log(v);
        hxy1 -= v * std::log(s.px[i] * s.py[j]);
      }
      const double w = s.px[i] * s.py[j];
      if (w > 0.0) hxy2 -= w * std::log(w);
    }
  }

  double sum_avg = 0.0;
  for (Eigen::Index k = 0; k < s.p_sum.size(); ++k) sum_avg += static_cast<double>(k) * s.p_sum[k];
  double sum_var = 0.0;
  for (Eigen::Index k = 0; k < s.p_sum.size(); ++k)
    sum_var += (k - sum_avg) * (k - sum_avg) * s.p_sum[k];
  const double sum_ent = vector_entropy(s.p_sum);

  double diff_avg = 0.0;
  for (Eigen::Index k = 0; k < s.p_diff.size(); ++k)
    diff_avg += static_cast<double>(k) * s.p_diff[k];
  double diff_var = 0.0;
  for (Eigen::Index k = 0; k < s.p_diff.size(); ++k)
    diff_var += (k - diff_avg) * (k - diff_avg) * s.p_diff[k];
  const double diff_ent = vector_entropy(s.p_diff);

  const double hx = vector_entropy(s.px);
  const double hy = vector_entropy(s.py);
  const double denom_sigma = sigma_x * sigma_y;
  const double denom_h = std::max(hx, hy);

  f[0] = autocorr;
  f[1] = contrast;
  f[2] = denom_sigma > 0.0 ? cov / denom_sigma : 0.0;
  f[3] = denom_sigma > 0.0 ? (autocorr - mu_x * mu_y) / denom_sigma : 0.0;
  f[4] = prominence;
  f[5] = shade;
  f[6] = dissimilarity;
  f[7] = energy;
  f[8] = entropy;
  f[9] = homog1;
  f[10] = homog2;
  f[11] = max_p;
  f[12] = var_x;
  f[13] = sum_avg;
  f[14] = sum_var;
  f[15] = sum_ent;
  f[16] = diff_var;
  f[17] = diff_ent;
  f[18] = denom_h > 0.0 ? (entropy - hxy1) / denom_h : 0.0;
  f[19] = std::sqrt(std::max(0.0, 1.0 - std::exp(-2.0 * (hxy2 - entropy))));
  f[20] = idn;
  f[21] = idmn;
}

}  // namespace

const std::vector<std::string>& texture_feature_names() {
  static const std::vector<std::string> names = {
      "autocorrelation",
      "contrast",
      "correlation_1",
      "correlation_2",
      "cluster_prominence",
      "cluster_shade",
      "dissimilarity",
      "energy",
      "entropy",
      "homogeneity_1",
      "homogeneity_2",
      "max_probability",
      "sum_of_squares_variance",
      "sum_average",
      "sum_variance",
      "sum_entropy",
      "difference_variance",
      "difference_entropy",
      "imc_1",
      "imc_2",
      "inverse_difference_normalized",
      "inverse_difference_moment_normalized",
  };
  return names;
}

Glcm compute_glcm(const QuantizedImage& img, const GlcmConfig& cfg, int offset_index) {
  validate_levels(img, cfg.levels);
  if (offset_index < 0 || offset_index >= static_cast<int>(cfg.offsets.size()))
    throw BadConfig("glcm: offset index out of range");
  const int dx = cfg.offsets[offset_index][0];
  const int dy = cfg.offsets[offset_index][1];
  if (std::abs(dx) >= img.width || std::abs(dy) >= img.height)
    throw OffsetTooLarge("glcm: offset leaves no valid pair positions");

  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(cfg.levels, cfg.levels);
  for (int y = 0; y < img.height; ++y) {
    const int ny = y + dy;
    if (ny < 0 || ny >= img.height) continue;
    for (int x = 0; x < img.width; ++x) {
      const int nx = x + dx;
      if (nx < 0 || nx >= img.width) continue;
      counts(img.at(x, y), img.at(nx, ny)) += 1.0;
      if (cfg.symmetric) counts(img.at(nx, ny), img.at(x, y)) += 1.0;
    }
  }
  Glcm out;
  out.pair_count = counts.sum();
  out.p = counts / out.pair_count;
  return out;
}

TextureFeatures texture_features(const Glcm& glcm) { return texture_features(glcm.p); }

TextureFeatures texture_features(const Eigen::Ref<const Eigen::MatrixXd>& p) {
  FeatureScratch scratch;
  TextureFeatures f;
  features_from(p, scratch, f);
  return f;
}

TextureFeatures average_over_offsets(const std::vector<TextureFeatures>& per_offset) {
  if (per_offset.empty()) throw EmptyList("average_over_offsets: empty input");
  TextureFeatures acc = TextureFeatures::Zero();
  for (const auto& f : per_offset) acc += f;
  return acc / static_cast<double>(per_offset.size());
}

FeatureGrid windowed_texture_map(const QuantizedImage& img, const GlcmConfig& cfg, int jobs) {
  validate_levels(img, cfg.levels);
  if (cfg.offsets.empty()) throw BadConfig("glcm: offsets must be non-empty");
  if (cfg.window < 3 || cfg.window % 2 == 0)
    throw BadConfig("glcm: window must be odd and >= 3");
  if (cfg.window > img.width || cfg.window > img.height)
    throw WindowLargerThanImage("glcm: window exceeds image size");
  for (const auto& off : cfg.offsets)
    if (std::abs(off[0]) >= cfg.window || std::abs(off[1]) >= cfg.window)
      throw OffsetTooLarge("glcm: offset leaves no pairs inside the window");

  FeatureGrid grid;
  grid.width = img.width;
  grid.height = img.height;
  grid.names = texture_feature_names();
  grid.values.resize(static_cast<Eigen::Index>(img.pixels()), kTextureFeatureCount);

  const int r = cfg.window / 2;
  const int n_offsets = static_cast<int>(cfg.offsets.size());
  const int w = img.width, h = img.height;

  parallel_for(static_cast<std::size_t>(img.height), jobs, [&](std::size_t row) {
    const int cy = static_cast<int>(row);
    Eigen::MatrixXd counts(cfg.levels, cfg.levels);
    FeatureScratch scratch;
    TextureFeatures f, acc;
    for (int cx = 0; cx < w; ++cx) {
      acc.setZero();
      for (int oi = 0; oi < n_offsets; ++oi) {
        const int dx = cfg.offsets[oi][0];
        const int dy = cfg.offsets[oi][1];
        counts.setZero();
        for (int wy = cy - r; wy <= cy + r; ++wy) {
          const int ny = wy + dy;
          if (ny < cy - r || ny > cy + r) continue;
          const int sy = std::clamp(wy, 0, h - 1);
          const int sny = std::clamp(ny, 0, h - 1);
          for (int wx = cx - r; wx <= cx + r; ++wx) {
            const int nx = wx + dx;
            if (nx < cx - r || nx > cx + r) continue;
            const int a = img.at(std::clamp(wx, 0, w - 1), sy);
            const int b = img.at(std::clamp(nx, 0, w - 1), sny);
            counts(a, b) += 1.0;
            if (cfg.symmetric) counts(b, a) += 1.0;
          }
        }
        counts /= counts.sum();
        features_from(counts, scratch, f);
        acc += f;
      }
      grid.values.row(static_cast<Eigen::Index>(cy) * w + cx) =
          (acc / static_cast<double>(n_offsets)).transpose();
    }
  });
  return grid;
}

}  // namespace duskfcm
