#pragma once

// Reader for the golden lexer fixtures (`fixtures.json`): an array of
// {"file", "tokens": [{"text", "exact_type_name", "line", "col"}]} records,
// optionally carrying an "error" class for files the reference tokenizer
// rejected.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tyco/error.hpp"
#include "tyco/lexer.hpp"

namespace tyco {

struct FixtureRecord {
  std::string file;
  std::vector<lexer::TypedToken> tokens;
  std::optional<std::string> error;
};

inline std::vector<FixtureRecord> load_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fixtures " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CorpusFormatError("malformed fixtures " + path.string() + ": " + e.what());
  }
  std::vector<FixtureRecord> out;
  for (const auto& rec : doc) {
    FixtureRecord r;
    r.file = rec.at("file").get<std::string>();
    if (rec.contains("error")) r.error = rec.at("error").get<std::string>();
    for (const auto& t : rec.at("tokens")) {
      const auto type_name = t.at("exact_type_name").get<std::string>();
      auto type = lexer::type_from_name(type_name);
      if (!type) throw CorpusFormatError("unknown token type " + type_name + " in " + r.file);
      r.tokens.push_back({t.at("text").get<std::string>(), *type, t.at("line").get<int>(),
                          t.at("col").get<int>()});
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace tyco
