#pragma once

// JSON (de)serialization of SystemInstance. The document groups fields by
// component:
//   {"source": {"p01", "p10"},
//    "channel": {"p_chnl", "p_r1", "p_r0", "p_p1", "p_p0"},
//    "costs": {"c_ns", "c_sr", "c_sp"},
//    "penalty": {"d00", "d01", "d10", "d11"},
//    "weights": {"w0", "w1"},
//    "bounds": {"c0", "d0"}}

#include <stdexcept>
#include <string>
#include <vector>

#include "core/model.hpp"
#include "core/types.hpp"

namespace aoisrp {

struct InstanceParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when the document parses but violates instance invariants; carries
// the full field-path error list.
struct InstanceValidationError : std::runtime_error {
    explicit InstanceValidationError(const std::string& what, std::vector<ValidationIssue> issues_)
        : std::runtime_error(what), issues(std::move(issues_)) {}
    std::vector<ValidationIssue> issues;
};

struct LoadedInstance {
    SystemInstance instance;
    std::vector<ValidationIssue> warnings;
};

// Parses and validates. Unknown or missing fields, non-numeric values and
// non-integer weights are parse errors; parse errors report line and column.
LoadedInstance parse_instance_json(const std::string& text);

// Reads the file and delegates to parse_instance_json. Missing or unreadable
// files raise std::runtime_error.
LoadedInstance load_instance_file(const std::string& path);

std::string instance_to_json(const SystemInstance& instance);

}  // namespace aoisrp
