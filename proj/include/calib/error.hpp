/*
 * Copyright 2026 The calibdim Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CALIB_ERROR_HPP_
#define CALIB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace calib {

// Malformed or inconsistent input data (bad rational string, wrong shape,
// point outside a domain). The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A hard size cap or enumeration budget was exceeded, or a requested object
// does not exist (e.g. unbounded polyhedron). The CLI maps this to exit 2.
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace calib

#endif  // CALIB_ERROR_HPP_
