// Copyright 2026 The entswitch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <entswitch/csv.hpp>
#include <entswitch/eigensolver.hpp>
#include <entswitch/errors.hpp>
#include <entswitch/fock.hpp>
#include <entswitch/matrix.hpp>
#include <entswitch/model.hpp>
#include <entswitch/quantum_state.hpp>
#include <entswitch/scenarios.hpp>
#include <entswitch/sweep.hpp>
