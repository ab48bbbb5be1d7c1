#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "zslab/bounds.hpp"
#include "zslab/group.hpp"
#include "zslab/petrov.hpp"
#include "zslab/property_d.hpp"
#include "zslab/search.hpp"

namespace zslab {

using Json = nlohmann::json;

/** A sequence as an array of coordinate vectors (one entry per copy). */
Json sequence_json(const ZSequence& S);

Json exact_result_json(const AbelianGroup& A, const std::string& quantity,
                       const ExactResult& r);
Json property_d_json(const PropertyDReport& rep);
Json bound_result_json(const BoundResult& b);
Json best_bounds_json(const AbelianGroup& A, const BestBounds& bb);

/** Parse {"group": "...", "elems": [[c...], ...]} into a sequence. */
ZSequence sequence_from_json(const Json& j);

/** Parse a squarefree element list for a known group: either a bare array of
 *  coordinate vectors or an object with an "elems" array. */
std::vector<uint16_t> set_from_json(const AbelianGroup& A, const Json& j);

/**
 * Minimal JSON-schema check supporting the keywords used by the shipped
 * schemas: type (string or list), properties, required, items, enum, oneOf,
 * additionalProperties (boolean).  Returns false and sets `error` on the
 * first mismatch.
 */
bool schema_validate(const Json& value, const Json& schema,
                     std::string* error = nullptr);

} // namespace zslab
