/*
 * Copyright 2026 The sparsekern Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 */

#ifndef SPARSEKERN_KERNEL_DESIGN_HPP
#define SPARSEKERN_KERNEL_DESIGN_HPP

#include <Eigen/Core>
#include <vector>

namespace sparsekern {

/// An ordered bank of Gaussian kernel widths. Widths must be strictly
/// positive and strictly increasing.
struct KernelBank {
  std::vector<double> widths;
  bool include_bias = true;

  /// J = 10 widths from 0.005 to 0.05 at 0.005 intervals.
  static KernelBank default_bank();
  /// Single-width bank (the single-kernel design).
  static KernelBank single(double h);

  void validate() const;
  int groups() const { return int(widths.size()); }
};

/// Design matrix with a bias column followed by one N-column block per
/// kernel width, plus the bookkeeping needed to evaluate new inputs.
/// Column layout: [bias | group 1 | ... | group J], each group ordered by
/// training index. Immutable once built.
struct GroupedDesign {
  Eigen::MatrixXd matrix;             // N x P
  std::vector<int> group_of_column;   // P entries, group id in {0,...,J}
  Eigen::MatrixXd centers;            // training inputs, N x D
  KernelBank bank;

  int rows() const { return int(matrix.rows()); }
  int cols() const { return int(matrix.cols()); }
};

/// exp(-||x - c||^2 / (2 h^2)); throws std::domain_error for h <= 0.
double gaussian_kernel(const Eigen::Ref<const Eigen::VectorXd>& x,
                       const Eigen::Ref<const Eigen::VectorXd>& c, double h);

/// Builds the grouped design for training inputs given row-wise as N x D.
/// P = bias + N * J columns. Deterministic for fixed inputs.
GroupedDesign build_design(const Eigen::MatrixXd& train_inputs,
                           const KernelBank& bank);

/// Kernel matrix between new inputs (M x D) and the stored training centers,
/// in the same column order as the design. Bias column is all ones.
Eigen::MatrixXd build_cross_design(const Eigen::MatrixXd& new_inputs,
                                   const GroupedDesign& design);

}  // namespace sparsekern

#endif  // SPARSEKERN_KERNEL_DESIGN_HPP
