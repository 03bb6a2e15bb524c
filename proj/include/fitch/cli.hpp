#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fitch/recognition.hpp"

namespace fitch::cli {

// Exit codes shared by every command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_input_error = 2;

// {"status":"FITCH"} or {"status":"NOT-FITCH","witnesses":[...]}, where each
// witness is one of
//   {"kind":"triangle","triple":[a,b,c]}
//   {"kind":"hlc","sets":[[...],[...]]}
//   {"kind":"ic","member":y,"neighborhood":[...]}
nlohmann::json verdict_to_json(const Verdict& verdict, const LabelSet& labels);

// `args` excludes the program name. "-" as an input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fitch::cli
