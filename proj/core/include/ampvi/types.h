// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef AMPVI_TYPES_H_
#define AMPVI_TYPES_H_

#include <Eigen/Core>

namespace ampvi {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

}  // namespace ampvi

#endif  // AMPVI_TYPES_H_
