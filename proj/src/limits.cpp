//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "wllab/limits.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace wllab {

Limits Limits::raised_to(std::size_t n) const {
  Limits out = *this;
  out.canonical_vertices =
      std::min(std::max(out.canonical_vertices, n), kCanonicalCeiling);
  out.circumference_vertices =
      std::min(std::max(out.circumference_vertices, n), kCircumferenceCeiling);
  out.enumeration_uniform = std::max(out.enumeration_uniform, n);
  out.enumeration_featured = std::max(out.enumeration_featured, n);
  return out;
}

const Limits &Limits::current() {
  static const Limits limits = [] {
    Limits base;
    const char *env = std::getenv("WLLAB_LIMIT_N");
    if (env == nullptr)
      return base;
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), n);
    if (ec != std::errc() || *ptr != '\0')
      return base;
    return base.raised_to(n);
  }();
  return limits;
}

}  // namespace wllab
