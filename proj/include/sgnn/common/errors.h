// Copyright 2026 The sgnn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace sgnn {

// Base for every error the library raises. The CLI maps subclasses onto exit
// codes (ConfigError -> 2, ProtocolError -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input files, inconsistent shapes, invalid parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Anything that aborts a running multi-party session.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class TransportError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

class TimeoutError : public TransportError {
 public:
  using TransportError::TransportError;
};

class PeerDisconnected : public TransportError {
 public:
  using TransportError::TransportError;
};

class FrameError : public TransportError {
 public:
  using TransportError::TransportError;
};

// Offline material ran out: the preprocessing phase was undersized.
class PoolExhausted : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

// Single-use correlated randomness was presented a second time.
class ReuseError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

}  // namespace sgnn
