#include "revivals/loop_io.hpp"

#include <fstream>

#include "revivals/error.hpp"

namespace revivals {
namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) {
        throw ConfigError(where + "." + key, "missing required field");
    }
    return j.at(key);
}

double as_number(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw ConfigError(where, "expected a number");
    }
    return j.get<double>();
}

int as_samples(const json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw ConfigError(where, "expected an integer");
    }
    const auto n = j.get<long long>();
    if (n < 3 || n > 100'000'000) {
        throw ConfigError(where, "sample count must be in [3, 1e8]");
    }
    return static_cast<int>(n);
}

Complex as_point(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError(where, "expected [x, y]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> as_points(const json& j, const std::string& where) {
    if (!j.is_array()) {
        throw ConfigError(where, "expected an array of [x, y] pairs");
    }
    std::vector<Complex> pts;
    pts.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        pts.push_back(as_point(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return pts;
}

Orientation orientation_field(const json& j, const std::string& where) {
    if (!j.contains("orientation")) {
        return Orientation::ccw;
    }
    const json& o = j.at("orientation");
    if (!o.is_string()) {
        throw ConfigError(where + ".orientation", "expected \"ccw\" or \"cw\"");
    }
    try {
        return orientation_from_string(o.get<std::string>());
    } catch (const ValidationError& e) {
        throw ConfigError(where + ".orientation", e.what());
    }
}

}  // namespace

LoopDescriptor loop_descriptor_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) {
        throw ConfigError(where, "expected a loop descriptor object");
    }
    const bool has_primitive = j.contains("primitive");
    const bool has_points = j.contains("points");
    if (has_primitive == has_points) {
        throw ConfigError(where, "exactly one of \"primitive\" or \"points\" is required");
    }
    if (has_points) {
        if (j.contains("orientation")) {
            throw ConfigError(where + ".orientation", "not allowed with explicit points; order encodes orientation");
        }
        return PointListSpec{as_points(j.at("points"), where + ".points")};
    }

    const json& prim = j.at("primitive");
    if (!prim.is_string()) {
        throw ConfigError(where + ".primitive", "expected a primitive name");
    }
    const auto name = prim.get<std::string>();
    if (name == "circle") {
        CircleSpec c;
        c.center = j.contains("center") ? as_point(j.at("center"), where + ".center") : Complex{};
        c.radius = as_number(require(j, "radius", where), where + ".radius");
        if (!(c.radius > 0.0)) {
            throw ConfigError(where + ".radius", "must be positive");
        }
        c.samples = as_samples(require(j, "samples", where), where + ".samples");
        c.orientation = orientation_field(j, where);
        return c;
    }
    if (name == "ellipse") {
        EllipseSpec e;
        e.center = j.contains("center") ? as_point(j.at("center"), where + ".center") : Complex{};
        const Complex axes = as_point(require(j, "semiaxes", where), where + ".semiaxes");
        e.semi_major = axes.real();
        e.semi_minor = axes.imag();
        if (!(e.semi_major > 0.0 && e.semi_minor > 0.0)) {
            throw ConfigError(where + ".semiaxes", "must be positive");
        }
        e.rotation = j.contains("rotation") ? as_number(j.at("rotation"), where + ".rotation") : 0.0;
        e.samples = as_samples(require(j, "samples", where), where + ".samples");
        e.orientation = orientation_field(j, where);
        return e;
    }
    if (name == "polygon") {
        return PolygonSpec{as_points(require(j, "vertices", where), where + ".vertices"), orientation_field(j, where)};
    }
    throw ConfigError(where + ".primitive", "unknown primitive \"" + name + "\" (circle, ellipse, polygon)");
}

LoopDescriptor load_loop_descriptor(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path.string(), "cannot open loop file");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string(), std::string("JSON parse error: ") + e.what());
    }
    return loop_descriptor_from_json(j, path.string());
}

}  // namespace revivals
