#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "pentachain/coords.hpp"
#include "pentachain/grassmann.hpp"
#include "pentachain/invariants.hpp"
#include "pentachain/triangulation.hpp"

namespace pentachain {

using Json = nlohmann::json;

Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

// {"n":..., "vertices":[{"id","coordinate","inner"}], "tetrahedra":
//  [{"id","vertices","orientation"}], "gluings":[[[tid,slot],[tid,slot]]]}
// The "inner" flag is derived, not trusted; "gluings" may be omitted when
// face labels determine the pairing.
Json complex_to_json(const Triangulation& tri, const CoordinateAssignment& zeta);
std::pair<Triangulation, CoordinateAssignment> complex_from_json(const Json& j);

Json element_to_json(const GrassmannElement& el, const std::function<std::string(int)>& name);

Json matrices_to_json(const ChainComplexData& data);
Json invariant_to_json(const InvariantValue& v);
Json pentagon_report_to_json(const PentagonReport& rep, const std::string& identity,
                             std::size_t n, std::uint64_t seed);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace pentachain
