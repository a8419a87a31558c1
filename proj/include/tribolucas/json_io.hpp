/*
   Copyright 2026 The tribolucas authors

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

#ifndef TRIBOLUCAS_JSON_IO_HPP
#define TRIBOLUCAS_JSON_IO_HPP

#include <json.hpp>

#include "tribolucas/identities.hpp"
#include "tribolucas/intpoly.hpp"

namespace tribolucas {

/// {"coeffs": ["<decimal>", ...]} ascending by power; decimal strings keep
/// arbitrary precision intact through JSON.
nlohmann::json poly_to_json(const IntPoly& p);

/// Inverse of poly_to_json. Accepts integer literals as well as strings.
IntPoly poly_from_json(const nlohmann::json& j);

/// {"identity": ..., "params": {...}, "pass": ..., "residual": "<text>"},
/// plus an "error" key when the instance was out of domain.
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace tribolucas

#endif
