#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace shapboost {

enum class TaskKind { Regression, BinaryClassification };

const char* to_string(TaskKind task);
TaskKind task_from_string(const std::string& name);

enum class ErrorKind {
  MissingColumn,
  NonNumericCell,
  EmptyFile,
  NonBinaryTarget,
  DegenerateSplit,
  InvalidShape,
  ConstantColumn,
  SchemaMismatch,
  ZeroCover,
  TooManyFeatures,
  TooFewRows,
  DimensionMismatch,
  MalformedDocument,
  DivergedLoss,
  LengthMismatch,
  ConstantTarget,
  SingleClass,
  BadK,
  DegenerateFolds,
  InvalidConfig,
  Io,
};

const char* to_string(ErrorKind kind);

/// Library error; `kind()` identifies the failure class, the message names
/// the offending location (row/column/path) where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Deterministic random source. Wraps std::mt19937_64 (bit-exact by the
/// standard) and derives doubles/integers with explicit transforms, so
/// streams are identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform();

  /// Standard normal via Box-Muller; pairs are cached.
  double normal();

  /// Uniform integer in [0, n) without modulo bias.
  uint64_t bounded(uint64_t n);

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    if (values.size() < 2) return;
    for (size_t i = values.size() - 1; i > 0; --i) {
      size_t j = static_cast<size_t>(bounded(i + 1));
      std::swap(values[i], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

/// Mixes two 64-bit values (splitmix64 finalizer); used to derive
/// per-round/per-tree seeds from a base seed.
uint64_t mix64(uint64_t a, uint64_t b);

/// Worker threads used by parallel_for. Defaults to the hardware count and
/// honours the optional SHAPBOOST_THREADS environment variable.
int max_threads();
void set_max_threads(int n);

/// Runs body(begin, end) over disjoint chunks of [0, count). Callers must
/// only write to disjoint state per index so results are thread-count
/// independent.
void parallel_for(size_t count, const std::function<void(size_t, size_t)>& body);

/// Shortest decimal representation that round-trips the exact double.
/// Locale-independent.
std::string repr(double value);

/// Fixed-point decimal with the given number of digits. Locale-independent.
std::string fixed(double value, int decimals);

/// FNV-1a 64-bit hash, hex-encoded. Used for config fingerprints.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace shapboost
