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

#include "sparsekern/kernel_design.hpp"

#include <cmath>
#include <stdexcept>

namespace sparsekern {

KernelBank KernelBank::default_bank() {
  KernelBank bank;
  for (int j = 1; j <= 10; ++j) bank.widths.push_back(0.005 * j);
  return bank;
}

KernelBank KernelBank::single(double h) {
  KernelBank bank;
  bank.widths.push_back(h);
  return bank;
}

void KernelBank::validate() const {
  if (widths.empty()) {
    throw std::invalid_argument("KernelBank: at least one width required");
  }
  double prev = 0.0;
  for (double h : widths) {
    if (!(h > prev)) {
      throw std::invalid_argument(
          "KernelBank: widths must be strictly positive and strictly increasing");
    }
    prev = h;
  }
}

double gaussian_kernel(const Eigen::Ref<const Eigen::VectorXd>& x,
                       const Eigen::Ref<const Eigen::VectorXd>& c, double h) {
  if (!(h > 0.0)) {
    throw std::domain_error("gaussian_kernel: bandwidth must be positive");
  }
  return std::exp(-(x - c).squaredNorm() / (2.0 * h * h));
}

GroupedDesign build_design(const Eigen::MatrixXd& train_inputs,
                           const KernelBank& bank) {
  bank.validate();
  const int n = int(train_inputs.rows());
  if (n < 2) {
    throw std::invalid_argument("build_design: need at least two inputs");
  }
  if (!train_inputs.allFinite()) {
    throw std::invalid_argument("build_design: inputs must be finite");
  }

  const int j_count = bank.groups();
  const int bias = bank.include_bias ? 1 : 0;
  const int p = bias + n * j_count;

  GroupedDesign design;
  design.centers = train_inputs;
  design.bank = bank;
  design.matrix.resize(n, p);
  design.group_of_column.resize(p);

  // squared pairwise distances, reused across widths
  Eigen::MatrixXd dist2(n, n);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < n; ++m) {
      dist2(i, m) = (train_inputs.row(i) - train_inputs.row(m)).squaredNorm();
    }
  }

  int col = 0;
  if (bias) {
    design.matrix.col(0).setOnes();
    design.group_of_column[0] = 0;
    col = 1;
  }
  for (int j = 0; j < j_count; ++j) {
    const double inv = 1.0 / (2.0 * bank.widths[j] * bank.widths[j]);
    for (int m = 0; m < n; ++m, ++col) {
      design.matrix.col(col) = (-dist2.col(m) * inv).array().exp();
      design.group_of_column[col] = j + 1;
    }
  }
  return design;
}

Eigen::MatrixXd build_cross_design(const Eigen::MatrixXd& new_inputs,
                                   const GroupedDesign& design) {
  if (design.centers.rows() == 0) {
    throw std::invalid_argument("build_cross_design: design has no stored centers");
  }
  if (new_inputs.cols() != design.centers.cols()) {
    throw std::invalid_argument("build_cross_design: input dimension mismatch");
  }
  const int n_new = int(new_inputs.rows());
  const int n = int(design.centers.rows());
  const int j_count = design.bank.groups();
  const int bias = design.bank.include_bias ? 1 : 0;

  Eigen::MatrixXd cross(n_new, bias + n * j_count);
  Eigen::MatrixXd dist2(n_new, n);
  for (int i = 0; i < n_new; ++i) {
    for (int m = 0; m < n; ++m) {
      dist2(i, m) = (new_inputs.row(i) - design.centers.row(m)).squaredNorm();
    }
  }
  int col = 0;
  if (bias) {
    cross.col(0).setOnes();
    col = 1;
  }
  for (int j = 0; j < j_count; ++j) {
    const double inv = 1.0 / (2.0 * design.bank.widths[j] * design.bank.widths[j]);
    for (int m = 0; m < n; ++m, ++col) {
      cross.col(col) = (-dist2.col(m) * inv).array().exp();
    }
  }
  return cross;
}

}  // namespace sparsekern
