#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fingeo/codes_hamming.hpp"
#include "fingeo/codes_rank.hpp"
#include "fingeo/constructions.hpp"
#include "fingeo/linset.hpp"
#include "fingeo/pointset.hpp"
#include "fingeo/psets.hpp"

namespace fingeo {

using Json = nlohmann::ordered_json;

/// [p, m, [c_0, ..., c_m]].
Json to_json(const FieldSpec& spec);
Json to_json(const Matrix& m);

/// {ambient: {N, Q: [p, m]}, points: [[...], ...]}, points ascending.
Json to_json(const PointSet& S);
PointSet point_set_from_json(const Json& j);

/// {tower: [p, e, n], r, basis: [[...], ...]}.
Json to_json(const LinearSet& L);
LinearSet linear_set_from_json(const Json& j);

Json to_json(const ConeSpec& c);
Json to_json(const AffineExtension& e);

/// {theorem, params, items: [{name, pass, skipped?, detail?, witness?}]}.
Json to_json(const Report& r);

/// {Q: [p, m], k, n, rows}.
Json to_json(const HammingCode& C);
HammingCode hamming_code_from_json(const Json& j);

/// {tower: [p, e, n], k, n, rows}; the top-level n is the code length.
Json to_json(const RankCode& C);
RankCode rank_code_from_json(const Json& j);

/// Header line then one "value,count" row per nonzero entry.
std::string distribution_csv(const std::vector<std::uint64_t>& dist, const std::string& header);
/// weight,size,count rows.
std::string profile_csv(const HyperplaneProfile& p);

} // namespace fingeo
