#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "duskfcm/errors.hpp"

namespace duskfcm {

struct SampleRecord {
  std::string id;
  std::filesystem::path image_path;
  std::optional<std::filesystem::path> mask_path;
};

struct DatasetIndex {
  std::filesystem::path root;
  std::vector<SampleRecord> samples;
};

/// Indexes a Kvasir-SEG style tree: <root>/images/*.{png,jpg,jpeg} with an
/// optional <root>/masks/ directory matched by filename stem. Samples come
/// back in lexicographic id order, so two runs over the same tree agree.
DatasetIndex index_dataset(const std::filesystem::path& root);

}  // namespace duskfcm
