#pragma once

#include <json.hpp>

#include <string>

namespace umbral {

// Fixture directory: an explicit override, then $UMBRAL_DATA_DIR, then the
// directory compiled into the library.
void set_data_dir(const std::string& dir);
std::string data_dir();

// Parse <data_dir>/<relative>; DataMissing if absent, DataCorrupt if unparsable.
const nlohmann::json& load_json(const std::string& relative);

}  // namespace umbral
