/*
 * Copyright (c) 2026, pvrfid contributors.
 * All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>

namespace pvrfid {

// A scenario file, CSV input or assembled parameter set violates a
// documented invariant. The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Filesystem-level failure: missing input file, unwritable output path.
// The CLI maps this to exit code 2.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace pvrfid
