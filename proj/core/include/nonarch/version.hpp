#pragma once

namespace nonarch {

inline constexpr const char* kToolName = "nonarch";
inline constexpr const char* kVersion = "0.1.0";

// Version of the machine-readable report layout. Bump on any change to the
// check payload shapes; the schema file under schema/ must move in lockstep.
inline constexpr int kReportSchemaVersion = 1;

}  // namespace nonarch
