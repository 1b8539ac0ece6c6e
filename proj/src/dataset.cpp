#include "duskfcm/dataset.hpp"

#include <algorithm>
#include <map>

namespace duskfcm {

namespace {

bool has_image_extension(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

}  // namespace

DatasetIndex index_dataset(const std::filesystem::path& root) {
  namespace fs = std::filesystem;
  const fs::path images_dir = root / "images";
  if (!fs::is_directory(images_dir))
    throw MissingImagesDir("no images/ directory under " + root.string());

  const fs::path masks_dir = root / "masks";
  std::map<std::string, fs::path> masks;
  if (fs::is_directory(masks_dir)) {
    for (const auto& entry : fs::directory_iterator(masks_dir)) {
      if (entry.is_regular_file() && has_image_extension(entry.path()))
        masks.emplace(entry.path().stem().string(), entry.path());
    }
  }

  DatasetIndex index;
  index.root = root;
  for (const auto& entry : fs::directory_iterator(images_dir)) {
    if (!entry.is_regular_file() || !has_image_extension(entry.path())) continue;
    SampleRecord rec;
    rec.id = entry.path().stem().string();
    rec.image_path = entry.path();
    if (auto it = masks.find(rec.id); it != masks.end()) rec.mask_path = it->second;
    index.samples.push_back(std::move(rec));
  }
  if (index.samples.empty()) throw EmptyDataset("no images found under " + images_dir.string());

  std::sort(index.samples.begin(), index.samples.end(),
            [](const SampleRecord& a, const SampleRecord& b) { return a.id < b.id; });
  // Same stem with two extensions: keep ids unique by appending the extension.
  for (std::size_t i = 1; i < index.samples.size(); ++i) {
    if (index.samples[i].id == index.samples[i - 1].id) {
      auto disambiguate = [](SampleRecord& r) {
        std::string ext = r.image_path.extension().string();
        if (!ext.empty() && ext[0] == '.') ext.erase(0, 1);
        r.id += "_" + ext;
      };
      disambiguate(index.samples[i - 1]);
      disambiguate(index.samples[i]);
    }
  }
  std::sort(index.samples.begin(), index.samples.end(),
            [](const SampleRecord& a, const SampleRecord& b) { return a.id < b.id; });
  return index;
}

}  // namespace duskfcm
