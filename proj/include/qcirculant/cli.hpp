// Copyright 2026 The qcirculant developers
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

#ifndef QCIRCULANT_CLI_HPP_
#define QCIRCULANT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace qcirc {

/// Dispatches one command line (without the program name). Exit codes:
/// 0 success, 1 verification or decoding failure, 2 usage error.
/// Output depends only on the arguments (and any --seed they carry).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcirc

#endif  // QCIRCULANT_CLI_HPP_
