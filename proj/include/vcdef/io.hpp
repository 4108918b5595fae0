// Copyright 2026 The vcdef Authors
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

#ifndef VCDEF_IO_HPP_
#define VCDEF_IO_HPP_

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "vcdef/certificate.hpp"
#include "vcdef/committee.hpp"
#include "vcdef/game.hpp"
#include "vcdef/set_system.hpp"
#include "vcdef/teaching.hpp"
#include "vcdef/uniform_template.hpp"

namespace vcdef {

// Text format: a "rows columns" header line, then one 0/1 string per row.
// Columns get default labels on the way in. Malformed input is an
// InputError.
SetSystem system_from_text(std::istream& in);
void system_to_text(const SetSystem& s, std::ostream& out);

// JSON format: {"columns": [labels], "rows": ["010", ...]}.
SetSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const SetSystem& s);

// Reads either format, deciding by whether the first non-space byte is '{'.
SetSystem load_system(const std::string& path);
void save_system(const SetSystem& s, const std::string& path,
                 bool as_json = false);

// {"members": [[[column, sign], ...]], "m", "k_max", "traces": ["010"]}.
// Reading cross-checks the recorded m and k_max against the member list;
// semantic checks against a system stay with Certificate::validate.
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);
Certificate load_certificate(const std::string& path);
void save_certificate(const Certificate& cert, const std::string& path);

nlohmann::json teaching_to_json(const SetSystem& s, const TeachingSet& t);
nlohmann::json isolation_to_json(const ConstraintIsolation& iso);
nlohmann::json game_to_json(const GameSolution& sol);
nlohmann::json committee_to_json(const Committee& c);
nlohmann::json template_to_json(const UniformTemplate& shape);

}  // namespace vcdef

#endif  // VCDEF_IO_HPP_
