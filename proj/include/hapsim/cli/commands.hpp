// SPDX-License-Identifier: Apache-2.0
//
// hapsim - link-level simulator for relay-assisted HAP MIMO X networks
// Copyright (C) 2026 The hapsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hapsim::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 2,
    kExitSingular = 3,
    kExitIo = 4,
};

/// Entry point of the `hapsim` tool. args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hapsim::cli
