#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semieq {

inline constexpr const char kVersion[] = "semieq 0.1.0";

/// Everything needed to reproduce a run byte-for-byte with the same build.
/// The embedded report block carries the reproducibility fields; the wall
/// clock timestamp goes only into the sibling manifest file so that reruns
/// produce identical reports.
struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  std::string z0;
  std::uint64_t seed = 0;
  std::string extra;  // free-form flag summary

  std::string to_text() const;
  std::string to_json_with_timestamp() const;
};

/// Writes a report (and its manifest) into dir under the given base name.
void write_report_files(const std::string& dir, const std::string& base,
                        const std::string& report_text,
                        const RunManifest& manifest,
                        const std::string* csv = nullptr);

}  // namespace semieq
