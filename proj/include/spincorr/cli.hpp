// Copyright 2026 The spincorr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>

namespace spincorr::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kSuccess = 0,
  kArgumentError = 2,
  kConvergenceError = 3,
  kCapacityError = 4,
  kIoError = 5,
};

/// Entry point of the `spincorr` tool; CSV goes to `out` unless --out is
/// given, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spincorr::cli
