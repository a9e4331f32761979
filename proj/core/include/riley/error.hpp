/*
 * Copyright 2026 The riley Authors
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
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace riley {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed slope, unsupported orders, out-of-range arguments.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Base for failures of a numerical procedure on valid input.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Matrix entries or polynomial values left the representable range.
class NumericRangeError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Root finder gave up. Carries the last iterates and the indices that
/// never met the stopping rule.
class ConvergenceError : public NumericError {
 public:
  ConvergenceError(const std::string& what, std::vector<std::size_t> unconverged,
                   std::vector<std::complex<double>> partial)
      : NumericError(what), unconverged_(std::move(unconverged)), partial_(std::move(partial)) {}

  const std::vector<std::size_t>& unconverged() const noexcept { return unconverged_; }
  const std::vector<std::complex<double>>& partial() const noexcept { return partial_; }

 private:
  std::vector<std::size_t> unconverged_;
  std::vector<std::complex<double>> partial_;
};

/// No Newton-convergent starting point for a pleating ray.
class SeedFailure : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Path continuation lost the branch (step size underflow).
class BranchTrackingError : public NumericError {
 public:
  BranchTrackingError(const std::string& what, double last_t, double last_re, double last_im)
      : NumericError(what), last_t_(last_t), last_re_(last_re), last_im_(last_im) {}

  double last_t() const noexcept { return last_t_; }
  double last_re() const noexcept { return last_re_; }
  double last_im() const noexcept { return last_im_; }

 private:
  double last_t_;
  double last_re_;
  double last_im_;
};

/// Two routes that must agree did not.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace riley
