#include "umbral/data.hpp"

#include "umbral/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>

namespace umbral {

namespace {

std::mutex& data_mutex() {
    static std::mutex m;
    return m;
}

std::string& override_dir() {
    static std::string d;
    return d;
}

std::map<std::string, std::unique_ptr<nlohmann::json>>& cache() {
    static std::map<std::string, std::unique_ptr<nlohmann::json>> c;
    return c;
}

}  // namespace

void set_data_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(data_mutex());
    override_dir() = dir;
    cache().clear();
}

std::string data_dir() {
    {
        std::lock_guard<std::mutex> lock(data_mutex());
        if (!override_dir().empty()) return override_dir();
    }
    if (const char* env = std::getenv("UMBRAL_DATA_DIR"); env && *env) return env;
#ifdef UMBRAL_DEFAULT_DATA_DIR
    return UMBRAL_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

const nlohmann::json& load_json(const std::string& relative) {
    std::string path = data_dir() + "/" + relative;
    std::lock_guard<std::mutex> lock(data_mutex());
    auto it = cache().find(path);
    if (it != cache().end()) return *it->second;
    std::ifstream in(path);
    if (!in) throw DataMissing("cannot open " + path);
    auto doc = std::make_unique<nlohmann::json>();
    try {
        in >> *doc;
    } catch (const nlohmann::json::exception& e) {
        throw DataCorrupt(path + ": " + e.what());
    }
    const nlohmann::json& ref = *doc;
    cache().emplace(path, std::move(doc));
    return ref;
}

}  // namespace umbral
