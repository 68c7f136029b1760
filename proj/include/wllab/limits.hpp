//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>

namespace wllab {

/// Capacity limits for the exponential-time kernels.
struct Limits {
  /// Largest (rooted) colored graph accepted by canonical coding.
  std::size_t canonical_vertices = 24;
  /// Largest graph accepted by the exact circumference search.
  std::size_t circumference_vertices = 20;
  /// Largest n for exhaustive enumeration with a single feature class.
  std::size_t enumeration_uniform = 8;
  /// Largest n for exhaustive enumeration with two or more feature classes.
  std::size_t enumeration_featured = 7;

  /// Hard ceilings imposed by the data layout; raised limits are clamped.
  static constexpr std::size_t kCanonicalCeiling = 64;
  static constexpr std::size_t kCircumferenceCeiling = 26;

  /// Returns a copy with every limit raised to at least `n` (clamped to the
  /// ceilings above).
  Limits raised_to(std::size_t n) const;

  /// Defaults, raised by the WLLAB_LIMIT_N environment variable when set.
  /// Read once per process.
  static const Limits &current();
};

}  // namespace wllab
