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

#include <iosfwd>
#include <string>
#include <vector>

namespace symrec::cli {

/// Runs the symrec command line on args (program name excluded), writing
/// results to out and diagnostics to err. Returns the process exit code:
///   0  success
///   2  usage error or unparseable/invalid input
///   3  numerical failure
///   4  correlation data incomplete for the requested reconstruction
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace symrec::cli
