// Copyright 2026 The funcword Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FUNCWORD_TOOLS_CLI_CLI_H_
#define FUNCWORD_TOOLS_CLI_CLI_H_

#include <ostream>

namespace funcword::cli {

// Entry point of the funcword tool. Returns 0 on success, 1 on an internal
// error and 2 on bad input or usage.
int RunFuncword(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace funcword::cli

#endif  // FUNCWORD_TOOLS_CLI_CLI_H_
