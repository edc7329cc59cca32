// Copyright 2026 The lrx Authors
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
//
#ifndef LRX_ERRORS_H_
#define LRX_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrx {

// Base of every exception thrown by the library. Extraction failure is not an
// error: it is reported as an empty optional.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. `offset()` is the byte offset of the problem when
// known, otherwise npos.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what,
                      std::size_t offset = std::string::npos)
      : Error(offset == std::string::npos
                  ? what
                  : what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A location or region that does not resolve in its document. Signals a
// caller bug rather than bad input data.
class InvalidLocationError : public Error {
 public:
  using Error::Error;
};

// No program in the DSL is consistent with the given examples.
class SynthesisError : public Error {
 public:
  using Error::Error;
};

// Program bundle could not be read: corrupt, wrong schema, or wrong version.
class BundleError : public Error {
 public:
  using Error::Error;
};

}  // namespace lrx

#endif  // LRX_ERRORS_H_
