// Copyright 2026 The fqwalk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fqw/basis.hpp"
#include "fqw/decoherence.hpp"
#include "fqw/entanglement.hpp"
#include "fqw/evolution.hpp"
#include "fqw/hamiltonian.hpp"
#include "fqw/scenario.hpp"
#include "fqw/types.hpp"
