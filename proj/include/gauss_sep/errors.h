// Copyright 2026 The gauss-sep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUSS_SEP_ERRORS_H_
#define GAUSS_SEP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gauss_sep {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (bad shape, out-of-domain
/// parameter, asymmetric input, invalid symplectic map).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An iterative kernel failed to converge or violated its residual bound.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, double determinant)
      : Error(what), determinant_(determinant) {}
  double determinant() const { return determinant_; }

 private:
  double determinant_;
};

/// Input covariance is not a bona fide quantum covariance matrix.
class UnphysicalStateError : public Error {
 public:
  UnphysicalStateError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// The Gaussian P-function does not exist (or sits on its boundary).
class RepresentationError : public Error {
 public:
  RepresentationError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// A search exhausted its domain without producing a certified result.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace gauss_sep

#endif  // GAUSS_SEP_ERRORS_H_
