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

#include "tribolucas/json_io.hpp"

namespace tribolucas {

nlohmann::json poly_to_json(const IntPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const BigInt& c : p.coefficients()) coeffs.push_back(c.get_str());
    return nlohmann::json{{"coeffs", std::move(coeffs)}};
}

IntPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("polynomial JSON must be {\"coeffs\": [...]}");
    std::vector<BigInt> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const auto& entry : j["coeffs"]) {
        if (entry.is_string())
            coeffs.emplace_back(entry.get<std::string>());
        else if (entry.is_number_integer())
            coeffs.emplace_back(static_cast<long>(entry.get<std::int64_t>()));
        else
            throw std::invalid_argument("polynomial coefficients must be decimal strings");
    }
    return IntPoly(std::move(coeffs));
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json params{{"n", report.instance.n}};
    const IdentityId id = report.instance.id;
    if (id == IdentityId::ArithProgSumCorrected || id == IdentityId::ArithProgSumAsPrinted) {
        params["m"] = report.instance.m;
        params["j"] = report.instance.j;
    }
    nlohmann::json out{{"identity", identity_name(id)},
                       {"params", std::move(params)},
                       {"pass", report.pass},
                       {"residual", to_string(report.residual)}};
    if (!report.error.empty()) out["error"] = report.error;
    return out;
}

}  // namespace tribolucas
