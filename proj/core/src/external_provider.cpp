#include "riskfield/external_provider.hpp"

#include "riskfield/errors.hpp"
#include "riskfield/image_io.hpp"
#include "riskfield/serialization.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

namespace riskfield {

namespace {

Json load_json_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ProtocolError(std::string(what) + " missing: " + path.string());
  }
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ProtocolError(std::string(what) + " malformed: " + e.what());
  }
}

Mask decode_rle(const Json& rle) {
  const int width = rle.at("width").get<int>();
  const int height = rle.at("height").get<int>();
  if (width <= 0 || height <= 0) {
    throw ProtocolError("mask_rle: dimensions must be positive");
  }
  Mask mask(width, height, 0);
  std::size_t pos = 0;
  std::uint8_t value = 0;  // runs alternate starting with background
  for (const Json& run : rle.at("runs")) {
    const std::int64_t count = run.get<std::int64_t>();
    if (count < 0 || pos + static_cast<std::size_t>(count) > mask.data.size()) {
      throw ProtocolError("mask_rle: runs exceed mask size");
    }
    for (std::int64_t i = 0; i < count; ++i) {
      mask.data[pos++] = value;
    }
    value = value == 0 ? 1 : 0;
  }
  if (pos != mask.data.size()) {
    throw ProtocolError("mask_rle: runs do not cover the mask");
  }
  return mask;
}

void invoke_provider(const std::string& command, const std::filesystem::path& workdir,
                     double timeout_s) {
  const pid_t pid = fork();
  if (pid < 0) {
    throw ProtocolError("failed to fork provider process");
  }
  if (pid == 0) {
    execlp(command.c_str(), command.c_str(), workdir.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  const auto deadline =
      std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_s);
  int status = 0;
  for (;;) {
    const pid_t done = waitpid(pid, &status, WNOHANG);
    if (done == pid) {
      break;
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      throw ProtocolError("provider timeout after " + std::to_string(timeout_s) + " s: " +
                          command);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    throw ProtocolError("provider '" + command + "' failed with status " +
                        std::to_string(code));
  }
}

}  // namespace

void write_request(const PerceptionRequest& request, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  Json j{{"prompt", request.prompt},
         {"state", Json{{"v", request.v}, {"phi", request.phi}}},
         {"camera", request.camera},
         {"hazards", request.hazards}};
  std::ofstream out(dir / "request.json", std::ios::binary);
  out << j.dump(2) << '\n';
  if (!out) {
    throw ProtocolError("failed to write request.json in " + dir.string());
  }
}

PerceptionRequest read_request(const std::filesystem::path& dir) {
  const Json j = load_json_file(dir / "request.json", "request.json");
  PerceptionRequest request;
  try {
    request.prompt = j.value("prompt", std::string{});
    request.v = j.at("state").at("v").get<double>();
    request.phi = j.at("state").at("phi").get<double>();
    j.at("camera").get_to(request.camera);
    request.hazards.clear();
    for (const Json& h : j.at("hazards")) {
      request.hazards.push_back(h.get<Hazard>());
    }
  } catch (const Json::exception& e) {
    throw ProtocolError(std::string("request.json schema error: ") + e.what());
  }
  return request;
}

void write_response(std::span<const HazardDetection> detections,
                    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  Json list = Json::array();
  for (std::size_t i = 0; i < detections.size(); ++i) {
    const HazardDetection& det = detections[i];
    const std::string mask_name = "mask_" + std::to_string(i) + ".pgm";
    write_pgm(det.mask, dir / mask_name);
    list.push_back(Json{{"hazard_id", det.hazard_id},
                        {"label", det.label},
                        {"c_vlm", det.c_vlm},
                        {"confidence", det.confidence},
                        {"depth_m", det.depth_m},
                        {"mask", mask_name}});
  }
  Json j{{"detections", list}};
  if (!detections.empty()) {
    j["width"] = detections.front().mask.width;
    j["height"] = detections.front().mask.height;
  }
  std::ofstream out(dir / "response.json", std::ios::binary);
  out << j.dump(2) << '\n';
  if (!out) {
    throw ProtocolError("failed to write response.json in " + dir.string());
  }
}

std::vector<HazardDetection> read_response(const std::filesystem::path& dir,
                                           int expected_width, int expected_height) {
  const Json j = load_json_file(dir / "response.json", "response.json");

  int width = expected_width;
  int height = expected_height;
  if (j.contains("width") && j.contains("height")) {
    const int declared_w = j.at("width").get<int>();
    const int declared_h = j.at("height").get<int>();
    if (width > 0 && (declared_w != width || declared_h != height)) {
      throw ProtocolError("response dimensions " + std::to_string(declared_w) + "x" +
                          std::to_string(declared_h) + " do not match the request camera");
    }
    width = declared_w;
    height = declared_h;
  }

  std::vector<HazardDetection> detections;
  if (!j.contains("detections") || !j.at("detections").is_array()) {
    throw ProtocolError("response.json: missing detections array");
  }
  for (const Json& d : j.at("detections")) {
    HazardDetection det;
    try {
      det.hazard_id = d.at("hazard_id").get<std::string>();
      det.label = d.at("label").get<std::string>();
      det.c_vlm = d.at("c_vlm").get<double>();
      det.confidence = d.at("confidence").get<double>();
      det.depth_m = d.value("depth_m", 0.0);
    } catch (const Json::exception& e) {
      throw ProtocolError(std::string("response detection schema error: ") + e.what());
    }

    if (d.contains("mask")) {
      const std::filesystem::path mask_path = dir / d.at("mask").get<std::string>();
      det.mask = read_pgm_mask(mask_path);
    } else if (d.contains("mask_rle")) {
      det.mask = decode_rle(d.at("mask_rle"));
    } else {
      throw ProtocolError("detection '" + det.hazard_id + "': no mask or mask_rle");
    }

    for (const HazardDetection& prev : detections) {
      if (prev.hazard_id == det.hazard_id) {
        throw ProtocolError("duplicate detection hazard_id '" + det.hazard_id + "'");
      }
    }
    if (width <= 0) {
      width = det.mask.width;  // first mask fixes the dimensions
      height = det.mask.height;
    }
    try {
      validate_detection(det, width, height);
    } catch (const ValidationError& e) {
      throw ProtocolError(e.what());
    }
    detections.push_back(std::move(det));
  }
  return detections;
}

std::vector<HazardDetection> external_perceive(const PerceptionRequest& request,
                                               const ExternalEndpoint& endpoint) {
  write_request(request, endpoint.workdir);
  if (!endpoint.command.empty()) {
    std::filesystem::remove(endpoint.workdir / "response.json");
    invoke_provider(endpoint.command, endpoint.workdir, endpoint.timeout_s);
  }
  return read_response(endpoint.workdir, request.camera.width, request.camera.height);
}

std::vector<HazardDetection> ExternalProvider::perceive(const Scenario& scenario,
                                                        const CameraModel& camera,
                                                        const MotorcycleState& state) {
  PerceptionRequest request;
  request.prompt = prompt_;
  request.v = state.v;
  request.phi = state.phi;
  request.camera = camera;
  request.hazards = scenario.hazards;
  return external_perceive(request, endpoint_);
}

ProviderFactory external_provider_factory(ExternalEndpoint endpoint, std::string prompt) {
  return [endpoint, prompt](std::uint64_t seed) {
    ExternalEndpoint ep = endpoint;
    ep.workdir = endpoint.workdir / ("ep_" + std::to_string(seed));
    return std::make_unique<ExternalProvider>(ep, prompt);
  };
}

}  // namespace riskfield
