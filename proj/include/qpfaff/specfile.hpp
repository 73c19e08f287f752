#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qpfaff/identity.hpp"

namespace qpfaff {

// JSON spec-file schema, shared by the built-in catalog serialization and
// user files so both get identical treatment. See README for the layout.
nlohmann::ordered_json record_to_json(const IdentityRecord& rec);
IdentityRecord record_from_json(const nlohmann::json& j);

// Loads and finalizes a record. Throws SpecFileError with field locations.
IdentityRecord ingest_spec_file(const std::filesystem::path& path);

std::string record_to_string(const IdentityRecord& rec);

}  // namespace qpfaff
