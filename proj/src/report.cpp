#include "semieq/report.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace semieq {

std::string RunManifest::to_text() const {
  std::ostringstream os;
  os << "# run manifest\n";
  os << "version: " << kVersion << "\n";
  os << "command: " << command << "\n";
  for (const auto& in : inputs) os << "input: " << in << "\n";
  if (!z0.empty()) os << "z0: " << z0 << "\n";
  os << "seed: " << seed << "\n";
  if (!extra.empty()) os << "flags: " << extra << "\n";
  return os.str();
}

std::string RunManifest::to_json_with_timestamp() const {
  nlohmann::json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  if (!z0.empty()) j["z0"] = z0;
  j["seed"] = seed;
  if (!extra.empty()) j["flags"] = extra;
  auto now = std::chrono::system_clock::now();
  j["timestamp_unix"] =
      std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
          .count();
  return j.dump(2) + "\n";
}

void write_report_files(const std::string& dir, const std::string& base,
                        const std::string& report_text,
                        const RunManifest& manifest, const std::string* csv) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory " + dir + ": " +
                             ec.message());
  auto write = [&](const std::string& name, const std::string& content) {
    fs::path p = fs::path(dir) / name;
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
  };
  write(base + "_report.txt", report_text);
  write(base + "_manifest.json", manifest.to_json_with_timestamp());
  if (csv) write(base + ".csv", *csv);
}

}  // namespace semieq
