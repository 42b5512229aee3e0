#pragma once

#include <string>

#include <json.hpp>

#include "qdense/bell.hpp"
#include "qdense/dense_coding.hpp"
#include "qdense/protocol.hpp"
#include "qdense/tensor.hpp"
#include "qdense/transfer.hpp"

namespace qdense {

using json = nlohmann::json;

// Amplitudes below this modulus are omitted from sparse listings.
inline constexpr double kListingCutoff = 1e-12;

// Complex numbers serialize as two-element [re, im] arrays; negative
// zero is normalized to zero.
json complex_to_json(cplx value);
json matrix_to_json(const ComplexMatrix& m);

// Nonzero terms of a state: [{"ket": [digits...], "amplitude": [re, im]}, ...].
json sparse_state_to_json(const StateVector& s);

json to_json(const MessageSymbol& symbol);
json to_json(const MeasurementOutcome& outcome);
json to_json(const TransferReport& report);
json to_json(const SessionReport& report, const SessionConfig& cfg);

// Human-readable rendering, e.g. "+0.707106781187|20> -0.707106781187|01>".
std::string state_to_text(const StateVector& s);
std::string ket_to_text(const std::vector<std::size_t>& digits);
std::string matrix_to_text(const ComplexMatrix& m);

}  // namespace qdense
