#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qgauss {

/// First failing instance of a checked identity: the parameters that produced
/// it plus both sides in rendered form.
struct Counterexample {
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string lhs;
    std::string rhs;
};

/// Deterministic verdict on a family of exact identities. `checked` counts
/// every comparison performed; `holds` is true iff none failed, and the
/// first failure (in the suite's documented sweep order) is kept.
struct VerificationReport {
    std::string suite;
    long long checked = 0;
    bool holds = true;
    std::optional<Counterexample> first_counterexample;

    /// Records one comparison; keeps only the earliest failure.
    void record(bool ok, Counterexample ce) {
        ++checked;
        if (!ok && holds) {
            holds = false;
            first_counterexample = std::move(ce);
        }
    }

    /// JSON text per the report schema:
    /// {"suite":..., "checked":..., "holds":..., "first_counterexample":
    ///  null | {"parameters": {...}, "lhs":..., "rhs":...}}
    std::string to_json(int indent = -1) const;
};

}  // namespace qgauss
