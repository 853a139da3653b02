/*
   Copyright 2026 braidkit contributors

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

#ifndef BRAIDKIT_REPORT_HPP
#define BRAIDKIT_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace braidkit {

enum class CheckStatus { Pass, Fail, Error };

/// Pass/fail record for one identity check.  Failure reports always
/// carry a witness (a rendered residual entry or polynomial).
struct VerificationReport {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
    long millis = 0;
    std::map<std::string, std::string> params;

    bool passed() const { return status == CheckStatus::Pass; }

    static VerificationReport pass(std::string name) {
        VerificationReport r;
        r.name = std::move(name);
        return r;
    }
    static VerificationReport fail(std::string name, std::string witness) {
        VerificationReport r;
        r.name = std::move(name);
        r.status = CheckStatus::Fail;
        r.witness = std::move(witness);
        return r;
    }
    static VerificationReport error(std::string name, std::string message) {
        VerificationReport r;
        r.name = std::move(name);
        r.status = CheckStatus::Error;
        r.witness = std::move(message);
        return r;
    }

    std::string status_str() const {
        switch (status) {
            case CheckStatus::Pass: return "pass";
            case CheckStatus::Fail: return "fail";
            default: return "error";
        }
    }
};

using ReportBundle = std::vector<VerificationReport>;

inline bool all_passed(const ReportBundle& b) {
    for (const auto& r : b)
        if (!r.passed()) return false;
    return true;
}

} // namespace braidkit

#endif // BRAIDKIT_REPORT_HPP
