#pragma once

#include <stdexcept>
#include <string>

namespace duskfcm {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define DUSKFCM_DEFINE_ERROR(Name)            \
  struct Name : Error {                       \
    using Error::Error;                       \
    Name() : Error(#Name) {}                  \
  }

// dataio
DUSKFCM_DEFINE_ERROR(MissingImagesDir);
DUSKFCM_DEFINE_ERROR(EmptyDataset);
DUSKFCM_DEFINE_ERROR(BadLevelCount);
DUSKFCM_DEFINE_ERROR(DecodeError);
DUSKFCM_DEFINE_ERROR(DimensionMismatch);
DUSKFCM_DEFINE_ERROR(IoError);

// texture / colorfeat
DUSKFCM_DEFINE_ERROR(OffsetTooLarge);
DUSKFCM_DEFINE_ERROR(EmptyList);
DUSKFCM_DEFINE_ERROR(WindowLargerThanImage);
DUSKFCM_DEFINE_ERROR(BadBinCount);

// features
DUSKFCM_DEFINE_ERROR(SingleClassLabels);

// clustering
DUSKFCM_DEFINE_ERROR(TooFewPoints);
DUSKFCM_DEFINE_ERROR(NotAnImageGrid);
DUSKFCM_DEFINE_ERROR(EmptyClusters);

// refine
DUSKFCM_DEFINE_ERROR(EmptySeeds);

// metrics
DUSKFCM_DEFINE_ERROR(NoPositives);
DUSKFCM_DEFINE_ERROR(NoPredictedPositives);
DUSKFCM_DEFINE_ERROR(UndefinedF1);
DUSKFCM_DEFINE_ERROR(NoNegatives);

// cli / config
DUSKFCM_DEFINE_ERROR(BadConfig);
DUSKFCM_DEFINE_ERROR(BadMethodList);

#undef DUSKFCM_DEFINE_ERROR

}  // namespace duskfcm
