#pragma once
// Validation outcome plumbing.  A report is ok exactly when it holds no
// violations; side observations that must not affect the verdict go into
// notes instead.

#include <string>
#include <vector>

namespace finrep {

struct Violation {
    std::string law;           // e.g. "associativity", "adjunction"
    std::vector<int> witness;  // the element tuple that broke it
    std::string detail;        // optional human-readable amplification

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> notes;  // diagnostics, never failures

    bool ok() const { return violations.empty(); }

    // Witness collection is capped per law so adversarial inputs cannot blow
    // the report up; the cap is generous for desk-scale carriers.
    static constexpr int kMaxWitnessesPerLaw = 32;

    // Returns false once the cap for this law is reached, so scan loops can
    // bail out early if they want to.
    bool add(const std::string& law, std::vector<int> witness,
             std::string detail = "") {
        int seen = 0;
        for (const auto& v : violations)
            if (v.law == law) ++seen;
        if (seen >= kMaxWitnessesPerLaw) return false;
        violations.push_back({law, std::move(witness), std::move(detail)});
        return true;
    }

    std::string summary() const {
        if (ok()) return "ok";
        std::string s;
        for (const auto& v : violations) {
            s += v.law + " at (";
            for (std::size_t i = 0; i < v.witness.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(v.witness[i]);
            }
            s += ")";
            if (!v.detail.empty()) s += ": " + v.detail;
            s += "\n";
        }
        return s;
    }
};

} // namespace finrep
