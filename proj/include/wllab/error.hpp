//
// wllab - Copyright 2026 The wllab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wllab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input: bad vertex ids, invalid graph documents,
/// colorings that do not match their graph.
class InputError : public Error {
public:
  using Error::Error;
};

/// A size limit was exceeded. Limits are raised through `Limits` or the
/// WLLAB_LIMIT_N environment variable.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A theorem or lemma hypothesis does not hold for the given input. `which`
/// names the failed hypothesis (e.g. "connected", "cycle-bound").
class PreconditionError : public InputError {
public:
  PreconditionError(std::string which, const std::string &what)
      : InputError(what), which_(std::move(which)) { }

  const std::string &which() const noexcept { return which_; }

private:
  std::string which_;
};

/// The inductive isomorphism construction could not extend its partial map.
/// Under the construction's preconditions this signals a bug.
class ConstructionError : public Error {
public:
  ConstructionError(const std::string &what,
                    std::vector<std::pair<int, int>> partial_map)
      : Error(what), partial_map_(std::move(partial_map)) { }

  const std::vector<std::pair<int, int>> &partial_map() const noexcept {
    return partial_map_;
  }

private:
  std::vector<std::pair<int, int>> partial_map_;
};

/// Rejection sampling ran out of draws.
class SamplingBudgetError : public Error {
public:
  using Error::Error;
};

}  // namespace wllab
