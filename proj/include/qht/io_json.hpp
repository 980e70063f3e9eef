// ============================================================================
// io_json.hpp — operator, pair, and channel file formats
// ============================================================================
//
// Operator: {"dim": d, "re": [[...]], "im": [[...]]} with row-major real and
// imaginary parts; ragged rows are rejected with the offending location.
// Pair:     {"rho": <operator>, "sigma": <operator>}
// Channel:  {"letters": [<operator>, ...], "p": [...]}  (p optional; uniform
//           when absent)
// ============================================================================

#pragma once

#include <string>

#include "qht/cq_channel.hpp"
#include "qht/state_space.hpp"

#include <json.hpp>

namespace qht {

// Parse failures and structural problems throw ValidationError naming the
// file and the JSON location.
Matrix operator_from_json(const nlohmann::json& j, const std::string& where);

HermitianOperator load_operator(const std::string& path);
HypothesisPair load_pair(const std::string& path);

struct ChannelFile {
  CQChannel channel;
  InputDistribution p;
};

ChannelFile load_channel(const std::string& path);

nlohmann::json operator_to_json(const Matrix& m);

}  // namespace qht
