//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "wllab/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "wllab/error.hpp"

namespace wllab {

void append_varint(std::string &out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

// Individualization-refinement search for the lexicographically smallest
// adjacency serialization. Refinement and target-cell choice depend only on
// the ordered partition, never on vertex numbering, so the minimum over all
// explored leaves is a canonical form. Leaves differing by a known
// automorphism that fixes the current prefix are skipped.
class Canonizer {
public:
  Canonizer(int n, const std::vector<Edge> &edges) : n_(n), rows_(n, 0) {
    for (const auto &e : edges) {
      rows_[e.u] |= std::uint64_t { 1 } << e.v;
      rows_[e.v] |= std::uint64_t { 1 } << e.u;
    }
  }

  std::vector<int> run(Partition initial) {
    std::vector<int> prefix;
    search(std::move(initial), prefix);
    return best_order_;
  }

  std::string bits_for(const std::vector<int> &order) const {
    std::string out((n_ * (n_ - 1) / 2 + 7) / 8, '\0');
    std::size_t bit = 0;
    for (int i = 0; i < n_; ++i) {
      std::uint64_t row = rows_[order[i]];
      for (int j = i + 1; j < n_; ++j, ++bit) {
        if ((row >> order[j]) & 1)
          out[bit / 8] |= static_cast<char>(0x80 >> (bit % 8));
      }
    }
    return out;
  }

private:
  void refine(Partition &cells) const {
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::uint64_t> masks(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c])
          masks[c] |= std::uint64_t { 1 } << v;

      for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
        if (cells[c].size() < 2)
          continue;
        std::vector<std::pair<std::vector<int>, int>> sigs;
        sigs.reserve(cells[c].size());
        for (int v : cells[c]) {
          std::vector<int> sig(cells.size());
          for (std::size_t d = 0; d < cells.size(); ++d)
            sig[d] = std::popcount(rows_[v] & masks[d]);
          sigs.emplace_back(std::move(sig), v);
        }
        std::sort(sigs.begin(), sigs.end());
        if (sigs.front().first == sigs.back().first)
          continue;

        Partition split;
        for (std::size_t i = 0; i < sigs.size(); ++i) {
          if (i == 0 || sigs[i].first != sigs[i - 1].first)
            split.emplace_back();
          split.back().push_back(sigs[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c),
                     split.begin(), split.end());
        changed = true;
      }
    }
  }

  int find(std::vector<int> &parent, int x) const {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }

  // Orbit representatives under the known automorphisms fixing `prefix`.
  std::vector<int> orbits(const std::vector<int> &prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto &gen : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int p) { return gen[p] == p; });
      if (!fixes)
        continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v), b = find(parent, gen[v]);
        if (a != b)
          parent[a] = b;
      }
    }
    for (int v = 0; v < n_; ++v)
      parent[v] = find(parent, v);
    return parent;
  }

  void search(Partition cells, std::vector<int> &prefix) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const Cell &c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }

    const std::size_t idx = static_cast<std::size_t>(target - cells.begin());
    Cell cell = *target;
    std::sort(cell.begin(), cell.end());
    std::vector<int> explored;
    for (int v : cell) {
      if (!explored.empty()) {
        auto orbit = orbits(prefix);
        bool seen = std::any_of(explored.begin(), explored.end(),
                                [&](int e) { return orbit[e] == orbit[v]; });
        if (seen)
          continue;
      }
      explored.push_back(v);

      Partition child = cells;
      Cell rest;
      for (int w : cell)
        if (w != v)
          rest.push_back(w);
      child[idx] = { v };
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                   std::move(rest));
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const Partition &cells) {
    std::vector<int> order;
    order.reserve(n_);
    for (const auto &c : cells)
      order.push_back(c.front());
    std::string bits = bits_for(order);

    if (best_order_.empty() || bits < best_bits_) {
      best_bits_ = std::move(bits);
      best_order_ = std::move(order);
    } else if (bits == best_bits_) {
      std::vector<int> gamma(n_);
      for (int i = 0; i < n_; ++i)
        gamma[best_order_[i]] = order[i];
      bool identity = true;
      for (int v = 0; v < n_ && identity; ++v)
        identity = gamma[v] == v;
      if (!identity)
        generators_.push_back(std::move(gamma));
    }
  }

  int n_;
  std::vector<std::uint64_t> rows_;
  std::string best_bits_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> generators_;
};

void check_capacity(std::size_t n, const Limits &limits) {
  std::size_t cap = std::min(limits.canonical_vertices,
                             Limits::kCanonicalCeiling);
  if (n > cap)
    throw CapacityError("canonical coding limited to " + std::to_string(cap)
                        + " vertices, got " + std::to_string(n));
}

CanonicalForm canonicalize(int n, const std::vector<Edge> &edges,
                           const std::vector<ColorId> &colors,
                           std::optional<int> root, const Limits &limits) {
  if (n < 0 || colors.size() != static_cast<std::size_t>(n))
    throw InputError("coloring does not match vertex count");
  check_capacity(static_cast<std::size_t>(n), limits);
  if (root && (*root < 0 || *root >= n))
    throw InputError("root position out of range");
  for (const auto &e : edges)
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
      throw InputError("invalid edge in colored graph");

  // Root first, then color classes in ascending color order.
  Partition initial;
  if (root)
    initial.push_back({ *root });
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!root || v != *root)
      rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(),
                   [&](int a, int b) { return colors[a] < colors[b]; });
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (i == 0 || colors[rest[i]] != colors[rest[i - 1]])
      initial.emplace_back();
    initial.back().push_back(rest[i]);
  }

  CanonicalForm form;
  std::string bytes;
  append_varint(bytes, static_cast<std::uint64_t>(n));
  append_varint(bytes, static_cast<std::uint64_t>(root ? 0 : n));
  if (n == 0) {
    form.code = CanonicalCode(std::move(bytes));
    return form;
  }

  Canonizer canonizer(n, edges);
  form.order = canonizer.run(std::move(initial));
  for (int v : form.order)
    append_varint(bytes, colors[v]);
  bytes += canonizer.bits_for(form.order);
  form.code = CanonicalCode(std::move(bytes));
  return form;
}

}  // namespace

CanonicalForm canonical_form(const RootedColoredGraph &rg,
                             const Limits &limits) {
  if (rg.colors.size() != rg.vertex_ids.size())
    throw InputError("rooted graph has mismatched color list");
  return canonicalize(static_cast<int>(rg.size()), rg.edges, rg.colors,
                      static_cast<int>(rg.root), limits);
}

CanonicalForm canonical_form_unrooted(const ColoredGraph &g,
                                      const Limits &limits) {
  return canonicalize(g.n, g.edges, g.colors, std::nullopt, limits);
}

CanonicalCode canonical_code(const RootedColoredGraph &rg,
                             const Limits &limits) {
  return canonical_form(rg, limits).code;
}

CanonicalCode canonical_code_unrooted(const ColoredGraph &g,
                                      const Limits &limits) {
  return canonical_form_unrooted(g, limits).code;
}

namespace {
std::atomic<std::uint64_t> next_interner_tag { 1 };
}

ColorInterner::ColorInterner() : tag_(next_interner_tag.fetch_add(1)) { }

ColorId ColorInterner::intern(std::string_view key) {
  auto [it, inserted] =
      table_.try_emplace(std::string(key), static_cast<ColorId>(table_.size()));
  return it->second;
}

ColorId ColorInterner::intern(const CanonicalCode &code) {
  std::string key;
  key.reserve(code.bytes().size() + 1);
  key.push_back('G');
  key += code.bytes();
  return intern(key);
}

ColoredGraph colored_by_features(const FeaturedGraph &g,
                                 ColorInterner &interner) {
  ColoredGraph out;
  out.n = g.size();
  out.edges = g.edges();
  out.colors.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    out.colors.push_back(interner.intern("F" + g.feature_key(v)));
  return out;
}

CanonicalCode canonical_code_unrooted(const FeaturedGraph &g,
                                      ColorInterner &interner,
                                      const Limits &limits) {
  return canonical_code_unrooted(colored_by_features(g, interner), limits);
}

}  // namespace wllab
