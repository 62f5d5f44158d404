#pragma once

#include <stdexcept>
#include <string>

namespace advicesim {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define ADVICESIM_DEFINE_ERROR(Name) \
  struct Name : Error {              \
    using Error::Error;              \
  }

// distribution
ADVICESIM_DEFINE_ERROR(NotNormalized);
ADVICESIM_DEFINE_ERROR(IndexOutOfRange);
ADVICESIM_DEFINE_ERROR(NegativeProbability);
ADVICESIM_DEFINE_ERROR(DuplicateIndex);
ADVICESIM_DEFINE_ERROR(WidthMismatch);
ADVICESIM_DEFINE_ERROR(InvalidWidth);
ADVICESIM_DEFINE_ERROR(EmptyBatch);
ADVICESIM_DEFINE_ERROR(AllMassInS);
ADVICESIM_DEFINE_ERROR(ParseError);

// codecs
ADVICESIM_DEFINE_ERROR(AdviceTooLongForWidth);
ADVICESIM_DEFINE_ERROR(GuardMismatch);
ADVICESIM_DEFINE_ERROR(HTooLarge);
ADVICESIM_DEFINE_ERROR(DegenerateEstimate);
ADVICESIM_DEFINE_ERROR(InsufficientNonSSamples);
ADVICESIM_DEFINE_ERROR(BoundVacuous);
ADVICESIM_DEFINE_ERROR(ZeroTV);
ADVICESIM_DEFINE_ERROR(DecodeFailed);

// learning / quantum
ADVICESIM_DEFINE_ERROR(InconsistentTrainingSet);
ADVICESIM_DEFINE_ERROR(ExactModeTooLarge);
ADVICESIM_DEFINE_ERROR(PTooLarge);
ADVICESIM_DEFINE_ERROR(EvenK);
ADVICESIM_DEFINE_ERROR(TooLarge);
ADVICESIM_DEFINE_ERROR(PeOutOfRange);

// stats / harness
ADVICESIM_DEFINE_ERROR(P0OutOfBounds);
ADVICESIM_DEFINE_ERROR(UnknownExperiment);
ADVICESIM_DEFINE_ERROR(InvalidParameters);

#undef ADVICESIM_DEFINE_ERROR

}  // namespace advicesim
