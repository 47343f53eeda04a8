// Copyright 2026 The gyw Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GYW_CLI_HPP
#define GYW_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include <gyw/gk.hpp>

namespace gyw::cli
{

enum ExitCode : int
{
    kSuccess = 0,
    kMismatch = 1,
    kUsage = 2,
};

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; returns the process exit status.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// Prints a report as "json" or "table"; kMismatch unless the sides agree.
int emit_report(const VerificationReport &report, const std::string &format, std::ostream &out);

} // namespace gyw::cli

#endif
