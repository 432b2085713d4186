#pragma once

#include <string>

#include "klv/closure.hpp"
#include "klv/hecke.hpp"
#include "klv/orbit_model.hpp"

namespace klv {

/// Serialization tag: "clan" or "diagonal".
std::string_view backend_tag(ModelKind k);

// All exporters are deterministic: fixed input gives byte-identical output.
// Orbits appear in (d, payload) order; table entries are sorted by
// (upper d, upper payload, lower d, lower payload); covers by (upper, lower).

std::string orbits_to_json(const OrbitModel& model);
std::string orbits_to_csv(const OrbitModel& model);
std::string orbits_to_text(const OrbitModel& model);

std::string poset_to_json(const OrbitModel& model, const ClosurePoset& poset);
std::string poset_to_csv(const ClosurePoset& poset);
std::string poset_to_dot(const ClosurePoset& poset);
std::string poset_to_text(const ClosurePoset& poset);

/// Table records carry ascending coefficient lists of the nonzero
/// polynomials; with_mu adds the top odd-gap coefficient per record.
std::string table_to_json(const KLVResult& r, bool with_mu);
std::string table_to_csv(const KLVResult& r, bool with_mu);
std::string table_to_text(const KLVResult& r, bool with_mu);

}  // namespace klv
