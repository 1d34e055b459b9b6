#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "graduation/version.hpp"

namespace graduation::cli {

using Json = nlohmann::ordered_json;

enum class Format { table, json };

// 64-bit FNV-1a, hex.
inline std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Insertion-ordered document, so identical inputs serialize identically.
struct ReportDocument {
  ReportDocument() = default;
  explicit ReportDocument(std::string name) : command(std::move(name)) {}

  std::string command;
  Json inputs = Json::object();
  std::string digest_extra;  // e.g. the bytes of an input file
  Json results = Json::object();

  std::string inputs_digest() const { return fnv1a_hex(command + "\n" + inputs.dump() + "\n" + digest_extra); }

  Json to_json() const {
    Json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["inputs_digest"] = inputs_digest();
    doc["results"] = results;
    doc["version"] = version;
    return doc;
  }

  std::string render(Format format) const {
    if (format == Format::json) return to_json().dump(2) + "\n";
    std::ostringstream out;
    render_table(out, "", to_json());
    return out.str();
  }

 private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  static bool is_uniform_rows(const Json& v) {
    if (!v.is_array() || v.empty()) return false;
    const auto& first = v.front();
    if (!first.is_object()) return false;
    for (const auto& row : v) {
      if (!row.is_object() || row.size() != first.size()) return false;
      auto a = row.begin();
      for (auto b = first.begin(); b != first.end(); ++a, ++b) {
        if (a.key() != b.key() || a->is_structured()) return false;
      }
    }
    return true;
  }

  static void render_rows(std::ostringstream& out, const std::string& name, const Json& rows) {
    std::vector<std::string> header;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) header.push_back(it.key());
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
      auto& line = cells.emplace_back();
      std::size_t c = 0;
      for (auto it = row.begin(); it != row.end(); ++it, ++c) {
        line.push_back(scalar(*it));
        width[c] = std::max(width[c], line.back().size());
      }
    }
    out << name << ":\n";
    const auto emit = [&](const std::vector<std::string>& fields) {
      out << " ";
      for (std::size_t c = 0; c < fields.size(); ++c) {
        out << ' ' << fields[c];
        if (c + 1 < fields.size()) out << std::string(width[c] - fields[c].size() + 1, ' ');
      }
      out << '\n';
    };
    emit(header);
    for (const auto& line : cells) emit(line);
  }

  static void render_table(std::ostringstream& out, const std::string& prefix, const Json& v) {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) {
        render_table(out, prefix.empty() ? it.key() : prefix + "." + it.key(), *it);
      }
    } else if (is_uniform_rows(v)) {
      render_rows(out, prefix, v);
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) render_table(out, prefix + "[" + std::to_string(i) + "]", v[i]);
    } else {
      out << prefix << ": " << scalar(v) << '\n';
    }
  }
};

}  // namespace graduation::cli
