#pragma once

#include <string>
#include <string_view>

#include "hybnet/cps.hpp"

namespace hybnet {

// JSON array of {label, rule, orientation, params:{partner,p,q,cut}}.
// orientation defaults to "forward". Schema checks only; throws
// ParseError(SchemaError) with the position of the offending text when it is
// malformed JSON, Error(SchemaError) naming the step otherwise.
ReductionTrace parse_trace(std::string_view text);
std::string serialize_trace(const ReductionTrace& trace);

}  // namespace hybnet
