// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cfp::cli {

// Full command-line surface, argv-style (args[0] is the program name).
// Streams are injected so tests drive the binary in-process. Returns the
// process exit code:
//   0  success (decide: yes, verify: valid)
//   1  decide: no / verify: violations found
//   2  domain errors (undefined efficacy, trivial-extension input, ...)
//   64 usage errors
//   65 unreadable or malformed input
//   70 guard refusals (enumeration or arithmetic limits)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfp::cli
