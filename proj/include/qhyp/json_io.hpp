#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qhyp/gram.hpp"
#include "qhyp/invariants.hpp"
#include "qhyp/loxodromic.hpp"
#include "qhyp/moduli.hpp"

namespace qhyp::io {

using nlohmann::json;

// Readers throw InvalidArgument on malformed documents.

json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

json to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);

/// {"n", "form", "points"}.
json points_to_json(std::span<const LiftVector> points);
std::vector<LiftVector> points_from_json(const json& j);

/// {"m", "form", "entries"}.
json gram_to_json(const SpecialGram& g);
SpecialGram gram_from_json(const json& j);

/// {"m", "n", "x2", "x3", "xk", "u", "cartan", "r"}; the reader validates.
json to_json(const ModuliCoordinates& w);
ModuliCoordinates coordinates_from_json(const json& j);

/// {"member", "rank", "violations": [{"I", "value", "need"}]}.
json to_json(const MembershipReport& r);

/// {"k", "generators"}.
json generators_to_json(std::span<const QMatrix> generators);
std::vector<QMatrix> generators_from_json(const json& j);

/// {"coordinates" (null for k = 1), "radii", "angles", "points"}.
json to_json(const RepCoordinates& rc);

json to_json(const LoxodromicClass& c);
LoxodromicClass class_from_json(const json& j);

json parse(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace qhyp::io
