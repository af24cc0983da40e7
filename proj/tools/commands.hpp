#pragma once

#include <iosfwd>

#include "scenario.hpp"

namespace bwave::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kInconsistent = 2 };

/// Verdict report as JSON.
int cmd_verdict(const Scenario& s, std::ostream& out);

/// Boundary trace CSV: theta[,phi], then u, d_nu u, Delta u, d_nu Delta u
/// as re/im pairs.
int cmd_trace(const Scenario& s, std::ostream& out);

/// f^, f-check, U^ and V-check on the direction grid, plus |f^ - U^|.
int cmd_spectral(const Scenario& s, std::ostream& out);

/// Traces of source and source + perturbation; exits with kConfigError if
/// the perturbation is not nonradiating.
int cmd_nonuniqueness(const Scenario& s, std::ostream& out);

/// u, f_h and f_m at the configured exterior radii.
int cmd_field(const Scenario& s, std::ostream& out);

}  // namespace bwave::cli
