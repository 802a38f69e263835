#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsing/graph.hpp"
#include "nsing/newton.hpp"

namespace nsing {

using Json = nlohmann::json;

// Exit codes: 0 success, 1 domain error or failed verification, 2 usage, file or parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

struct InputDocument {
    std::string name;
    Support monomials;
};

// Throws std::invalid_argument on malformed documents.
InputDocument parse_input(const Json& doc);

Json to_json(const BigInt& v);  // number when it fits in 64 bits, decimal string otherwise
BigInt bigint_from_json(const Json& j);

Json graph_to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const Json& j);
std::string graph_to_dot(const PlumbingGraph& g);
std::string graph_to_text(const PlumbingGraph& g);

}  // namespace nsing
