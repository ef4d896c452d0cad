/*
   Copyright 2026 cenda developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CENDA_DRIVER_HPP
#define CENDA_DRIVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cenda/algebras.hpp"

namespace cenda {

/// Outcome of one batch command: the text report and the process exit code
/// (0 success/true, 1 checked-false, 2 invalid input, 3 resource cap).
struct CmdResult {
    int status = 0;
    std::string text;
};

/// Parse "cend N" | "curr N" | "cendq N <matrix-file>"; the matrix file is
/// read relative to the current directory.
AlgebraSpec parse_algebra_spec(const std::string& text);

CmdResult cmd_product(const std::vector<std::string>& element_texts, unsigned n, bool kv);
CmdResult cmd_check_random(const std::string& identity, std::uint64_t seed, unsigned count, unsigned size_cap,
                           unsigned deg_cap, bool kv);
CmdResult cmd_check_elems(const std::string& identity, const std::string& elems_text, bool kv);
CmdResult cmd_gk_spec(const std::string& spec_text, unsigned n_max, bool kv);
CmdResult cmd_gk_gens(const std::string& gens_text, unsigned n_max, bool kv);
CmdResult cmd_iso(const std::string& p_text, const std::string& q_text, bool kv);
CmdResult cmd_member(const std::string& spec_text, const std::string& elem_text, bool kv);
CmdResult cmd_unit(const std::string& elem_text, const std::string& probes_text, bool kv);  // "" = default probes
CmdResult cmd_idem(const std::string& elem_text, bool kv);
CmdResult cmd_snf(const std::string& mat_text, bool kv);
CmdResult cmd_oracle(std::uint64_t seed, unsigned count, unsigned size_cap, unsigned deg_cap, bool kv);

}  // namespace cenda

#endif
