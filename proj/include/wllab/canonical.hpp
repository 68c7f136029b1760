//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wllab/graph.hpp"
#include "wllab/limits.hpp"

namespace wllab {

/// Byte string that is equal for two colored graphs iff they are isomorphic
/// (rooted variants: root mapped to root).
///
/// Layout: [n varint][root position varint, n when unrooted]
///         [color varints in canonical order]
///         [row-major upper-triangular adjacency bits, MSB first, padded]
class CanonicalCode {
public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) { }

  const std::string &bytes() const { return bytes_; }
  std::string hex() const;

  friend auto operator<=>(const CanonicalCode &,
                          const CanonicalCode &) = default;

private:
  std::string bytes_;
};

/// A colored graph without a root.
struct ColoredGraph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<ColorId> colors;
};

/// Code plus the labeling that produced it: order[p] is the vertex placed at
/// canonical position p. Composing two labelings with equal codes yields an
/// isomorphism.
struct CanonicalForm {
  CanonicalCode code;
  std::vector<Vertex> order;
};

/// Throws CapacityError when the graph exceeds limits.canonical_vertices.
CanonicalForm canonical_form(const RootedColoredGraph &rg,
                             const Limits &limits = Limits::current());
CanonicalForm canonical_form_unrooted(const ColoredGraph &g,
                                      const Limits &limits = Limits::current());

CanonicalCode canonical_code(const RootedColoredGraph &rg,
                             const Limits &limits = Limits::current());
CanonicalCode canonical_code_unrooted(const ColoredGraph &g,
                                      const Limits &limits = Limits::current());

/// Injective map from byte strings to dense color ids.
///
/// Not thread-safe: callers serialize access or keep one interner per task.
/// Ids are only meaningful within one interner; `tag()` identifies it.
class ColorInterner {
public:
  ColorInterner();
  ColorInterner(const ColorInterner &) = delete;
  ColorInterner &operator=(const ColorInterner &) = delete;
  ColorInterner(ColorInterner &&) = default;
  ColorInterner &operator=(ColorInterner &&) = default;

  ColorId intern(std::string_view key);
  ColorId intern(const CanonicalCode &code);

  std::size_t size() const { return table_.size(); }
  std::uint64_t tag() const { return tag_; }

private:
  std::unordered_map<std::string, ColorId> table_;
  std::uint64_t tag_;
};

/// Colors each vertex by its interned feature vector.
ColoredGraph colored_by_features(const FeaturedGraph &g,
                                 ColorInterner &interner);

/// Unrooted code of a featured graph; features are interned through
/// `interner`, so codes are comparable only under the same interner.
CanonicalCode canonical_code_unrooted(const FeaturedGraph &g,
                                      ColorInterner &interner,
                                      const Limits &limits = Limits::current());

/// LEB128 encoding, shared by every byte-level key in the library.
void append_varint(std::string &out, std::uint64_t value);

}  // namespace wllab
