// Copyright 2026 The symrec Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace symrec {

/// Iterative algorithm failed to converge or a matrix factorization broke down.
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string &what) : std::runtime_error(what) {}
};

/// Malformed input file. Carries enough context to point the user at the bad field.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string &context, const std::string &what)
        : std::runtime_error(context + ": " + what), context_(context) {}
    const std::string &context() const { return context_; }

  private:
    std::string context_;
};

/// A reconstruction was requested with correlation values missing for required keys.
class missing_data_error : public std::runtime_error {
  public:
    explicit missing_data_error(std::vector<std::string> missing_keys)
        : std::runtime_error(format(missing_keys)), missing_keys_(std::move(missing_keys)) {}
    const std::vector<std::string> &missing_keys() const { return missing_keys_; }

  private:
    static std::string format(const std::vector<std::string> &keys) {
        std::string msg = "missing correlation values for:";
        for(const auto &k : keys) msg += " " + k;
        return msg;
    }
    std::vector<std::string> missing_keys_;
};

} // namespace symrec
