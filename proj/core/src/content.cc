// Copyright 2026 The Avatar Game Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "avatar_game/content.h"

#include <fstream>
#include <set>
#include <sstream>

#include "avatar_game/serialization.h"

namespace avatar_game {
namespace {

// Major version of the content format this build reads.
constexpr std::string_view kSupportedMajor = "1";

std::string describe(const std::vector<Diagnostic>& diagnostics) {
  std::string text = "content pack failed validation:";
  for (const auto& d : diagnostics) {
    text += "\n  ";
    if (!d.item.empty()) text += d.item + ": ";
    text += d.message;
  }
  return text;
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : Error(ErrorCode::kValidationError, describe(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

std::vector<Diagnostic> validate_content(const ContentDocument& doc) {
  std::vector<Diagnostic> out;
  auto report = [&](std::string item, std::string message) {
    out.push_back({std::move(item), std::move(message)});
  };

  if (doc.pack_id.empty()) report("", "pack_id is empty");
  if (doc.version.substr(0, doc.version.find('.')) != kSupportedMajor) {
    report("", "unsupported version '" + doc.version + "', expected 1.x");
  }

  std::size_t recognition = 0;
  std::size_t recall = 0;
  for (const auto& c : doc.avatar_challenges) {
    if (c.kind == ChallengeKind::kRecognition) ++recognition;
    if (c.kind == ChallengeKind::kRecall) ++recall;
  }
  if (doc.standard_challenges.size() < kStandardPerSession) {
    report("", "insufficient standard challenges: " +
                   std::to_string(doc.standard_challenges.size()) + " < 7");
  }
  if (recognition < kRecognitionPerSession) {
    report("", "insufficient recognition challenges: " + std::to_string(recognition) +
                   " < 3");
  }
  if (recall < kRecallPerSession) {
    report("", "insufficient recall challenges: " + std::to_string(recall) + " < 3");
  }

  // Pools and attributes.
  std::set<std::string, std::less<>> pool_ids;
  for (const auto& pool : doc.value_pools) {
    if (!pool_ids.insert(pool.pool_id).second) {
      report(pool.pool_id, "duplicate pool id");
      continue;
    }
    try {
      validate_pool(pool);
    } catch (const Error& e) {
      report(pool.pool_id, e.what());
    }
  }
  std::set<std::string, std::less<>> attribute_ids;
  for (const auto& attr : doc.attributes) {
    if (attr.attribute_id.empty()) {
      report("", "attribute with empty id");
    } else if (!attribute_ids.insert(attr.attribute_id).second) {
      report(attr.attribute_id, "duplicate attribute id");
    }
    if (pool_ids.find(attr.value_pool_ref) == pool_ids.end()) {
      report(attr.attribute_id, "unresolved pool '" + attr.value_pool_ref + "'");
    }
  }
  if (doc.attributes.empty()) report("", "attribute schema is empty");

  // Only build a schema when the attribute section is sound, so challenge
  // checks below can rely on it.
  std::optional<AvatarSchema> schema;
  try {
    schema.emplace(doc.attributes, doc.value_pools);
  } catch (const Error&) {
  }

  std::set<std::string, std::less<>> challenge_ids;
  auto check_id = [&](const std::string& id) {
    if (!id.empty() && !challenge_ids.insert(id).second) {
      report(id, "duplicate challenge id");
    }
  };
  for (const auto& c : doc.standard_challenges) {
    check_id(c.challenge_id);
    try {
      validate_challenge(c);
    } catch (const Error& e) {
      report(c.challenge_id, e.what());
    }
  }
  for (const auto& c : doc.avatar_challenges) {
    check_id(c.challenge_id);
    if (attribute_ids.find(c.attribute_id) == attribute_ids.end()) {
      report(c.challenge_id, "unknown attribute '" + c.attribute_id + "'");
      continue;
    }
    if (!schema) continue;
    try {
      validate_challenge(c, *schema);
    } catch (const Error& e) {
      report(c.challenge_id, e.what());
    }
  }

  for (auto kind : doc.messages.missing_kinds()) {
    report("messages", "no templates for " + std::string(to_string(kind)));
  }
  return out;
}

ContentPack ContentPack::from_document(ContentDocument document) {
  auto diagnostics = validate_content(document);
  if (!diagnostics.empty()) throw ValidationError(std::move(diagnostics));
  ContentPack pack;
  pack.schema_ = AvatarSchema(document.attributes, document.value_pools);
  pack.document_ = std::move(document);
  return pack;
}

const StandardChallenge* ContentPack::find_standard(std::string_view id) const {
  for (const auto& c : document_.standard_challenges) {
    if (c.challenge_id == id) return &c;
  }
  return nullptr;
}

const AvatarChallenge* ContentPack::find_avatar(std::string_view id) const {
  for (const auto& c : document_.avatar_challenges) {
    if (c.challenge_id == id) return &c;
  }
  return nullptr;
}

Challenge ContentPack::challenge(std::string_view id) const {
  if (const auto* standard = find_standard(id)) return *standard;
  if (const auto* avatar = find_avatar(id)) return *avatar;
  throw Error(ErrorCode::kNotFound, "no challenge '" + std::string(id) + "'");
}

std::vector<const AvatarChallenge*> ContentPack::avatar_challenges_of(
    ChallengeKind kind) const {
  std::vector<const AvatarChallenge*> out;
  for (const auto& c : document_.avatar_challenges) {
    if (c.kind == kind) out.push_back(&c);
  }
  return out;
}

ContentDocument parse_content_document(std::string_view text) {
  try {
    return json::parse(text).get<ContentDocument>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("content pack: ") + e.what());
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, std::string("content pack: ") + e.what());
  }
}

ContentPack parse_content_pack(std::string_view text) {
  return ContentPack::from_document(parse_content_document(text));
}

ContentPack load_content_pack(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open content pack " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_content_pack(buffer.str());
}

std::string serialize_content_document(const ContentDocument& document) {
  return json(document).dump(2);
}

const ContentPack& sample_content_pack() {
  static const ContentPack pack = parse_content_pack(sample_content_text());
  return pack;
}

}  // namespace avatar_game
