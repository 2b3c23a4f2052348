#pragma once

#include <stdexcept>
#include <string>

namespace sgdspectra {

// Numeric values are part of the C ABI (see include/sgdspectra/sgdspectra.h).
enum class Status : int {
  Ok = 0,
  InvalidArg = 1,
  NonUnitMean = 2,
  DegenerateGram = 3,
  BadProbs = 4,
  NonOrthogonalXorMeans = 5,
  DimensionMismatch = 6,
  NonFinite = 7,
  ZeroPreactivation = 8,
  EmptySampleSet = 9,
  NoConvergence = 10,
  TooLarge = 11,
  NotSymmetric = 12,
  ZeroVector = 13,
  ZeroMatrix = 14,
  ZeroRow = 15,
  BadIndices = 16,
  NonPsdRperp = 17,
  BetaOutOfRange = 18,
  BadPartition = 19,
  GridMismatch = 20,
  Io = 21,
  BadConfig = 22,
  Internal = 23,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
 public:
  Error(Status code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Status code() const { return code_; }

 private:
  Status code_;
};

[[noreturn]] inline void fail(Status code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, Status code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace sgdspectra
