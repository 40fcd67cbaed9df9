#ifndef COFIL_REPORT_HPP
#define COFIL_REPORT_HPP

#include "cofil/io.hpp"
#include "cofil/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cofil {

/// Rendered subcommand output. `json` is deterministic: identical input
/// bytes and flags produce identical report bytes. `property_ok` false
/// maps to CLI exit status 2 (a property violation, not a usage error).
struct CliReport {
    std::string json;
    bool property_ok = true;
};

CliReport tree_report(const FiltrationDocument& doc, const std::string& grade_id,
                      Ring ring);
CliReport cofiltration_report(const FiltrationDocument& doc, Ring ring);
CliReport subfiltration_report(const FiltrationDocument& doc, std::uint64_t budget);
CliReport precover_report(const FiltrationDocument& doc, Ring ring);
CliReport span_report(const FiltrationDocument& doc, int n,
                      const std::optional<std::string>& grade_id);
CliReport homology_report(const FiltrationDocument& doc, Ring ring,
                          const std::optional<std::string>& grade_id);
/// Runs the whole invariant suite on the input and reports one line per
/// check: tree validity, exchange characterization, leading simplices,
/// cycle-basis ranks, complement monotonicity, normal-form self-checks,
/// homology cross-checks, decomposition accounting, and the epimorphism
/// rank table.
CliReport verify_report(const FiltrationDocument& doc, Ring ring);

} // namespace cofil

#endif
