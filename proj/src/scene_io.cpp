#include "fovregion/scene_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "fovregion/errors.hpp"

namespace fovregion {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  if (!obj.is_object()) throw ValidationError(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ValidationError("unknown key '" + key + "' in " + where);
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(where + " is missing '" + key + "'");
  return *it;
}

double number(const json& v, const std::string& what) {
  if (!v.is_number()) throw ValidationError(what + " must be a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ValidationError(what + " must be an integer");
  return v.get<int>();
}

Vec3 vec3(const json& v, const std::string& what) {
  if (!v.is_array() || v.size() != 3) throw ValidationError(what + " must be [x, y, z]");
  return {number(v[0], what), number(v[1], what), number(v[2], what)};
}

json to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

}  // namespace

Scene parse_scene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scene is not valid JSON: ") + e.what());
  }
  reject_unknown(doc, {"camera", "markers", "reference_center"}, "scene");

  Scene scene;
  const json& cam = require(doc, "camera", "scene");
  reject_unknown(cam, {"theta", "phi", "width", "height", "h_c"}, "camera");
  scene.camera.theta = number(require(cam, "theta", "camera"), "camera.theta");
  scene.camera.phi = number(require(cam, "phi", "camera"), "camera.phi");
  scene.camera.width = integer(require(cam, "width", "camera"), "camera.width");
  scene.camera.height = integer(require(cam, "height", "camera"), "camera.height");
  scene.camera.h_c = number(require(cam, "h_c", "camera"), "camera.h_c");

  const json& markers = require(doc, "markers", "scene");
  if (!markers.is_array()) throw ValidationError("markers must be an array");
  for (std::size_t i = 0; i < markers.size(); ++i) {
    const std::string where = "markers[" + std::to_string(i) + "]";
    const json& m = markers[i];
    reject_unknown(m, {"id", "points", "normal"}, where);
    Marker marker;
    const json& id = require(m, "id", where);
    if (!id.is_string()) throw ValidationError(where + ".id must be a string");
    marker.id = id.get<std::string>();
    const json& pts = require(m, "points", where);
    if (!pts.is_array()) throw ValidationError(where + ".points must be an array");
    for (const auto& p : pts) marker.points.push_back(vec3(p, where + ".points"));
    const Vec3 n = vec3(require(m, "normal", where), where + ".normal");
    if (!(n.norm() > 0.0)) throw ValidationError(where + ".normal must be non-zero");
    marker.unit_normal = n.normalized();
    scene.markers.push_back(std::move(marker));
  }

  if (auto it = doc.find("reference_center"); it != doc.end())
    scene.reference_center = vec3(*it, "reference_center");

  validate(scene);
  return scene;
}

Scene load_scene(const std::filesystem::path& path) { return parse_scene(read_text(path)); }

std::string scene_to_json(const Scene& scene) {
  json doc;
  doc["camera"] = {{"theta", scene.camera.theta},
                   {"phi", scene.camera.phi},
                   {"width", scene.camera.width},
                   {"height", scene.camera.height},
                   {"h_c", scene.camera.h_c}};
  doc["markers"] = json::array();
  for (const auto& m : scene.markers) {
    json pts = json::array();
    for (const auto& p : m.points) pts.push_back(to_json(p));
    doc["markers"].push_back({{"id", m.id}, {"points", pts}, {"normal", to_json(m.unit_normal)}});
  }
  if (scene.reference_center) doc["reference_center"] = to_json(*scene.reference_center);
  return doc.dump(2) + "\n";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace fovregion
