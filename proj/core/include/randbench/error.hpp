// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace randbench {

// Base of every error thrown by the library. The CLI maps these onto exit
// codes, so each subclass names one failure class.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual or binary input (bad characters, corrupt descriptors).
class FormatError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied parameter is outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Input data is structurally valid but unusable (e.g. too short).
class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A generator cannot produce the requested amount of output.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace randbench
