// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace entswitch {

// Invalid arguments are reported as std::domain_error throughout.

/// A numerical routine failed to meet its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A density matrix has an eigenvalue below the round-off floor.
class PositivityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace entswitch
