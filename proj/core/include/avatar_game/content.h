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

#ifndef AVATAR_GAME_CONTENT_H_
#define AVATAR_GAME_CONTENT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "avatar_game/avatar.h"
#include "avatar_game/challenge.h"
#include "avatar_game/error.h"
#include "avatar_game/persuasion.h"

namespace avatar_game {

inline constexpr std::size_t kStandardPerSession = 7;
inline constexpr std::size_t kRecognitionPerSession = 3;
inline constexpr std::size_t kRecallPerSession = 3;

// One validation finding. `item` names the offending challenge, attribute or
// pool ("" for pack-level findings).
struct Diagnostic {
  std::string item;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// Raised by the content loader; carries every violation found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Unvalidated content as read from disk.
struct ContentDocument {
  std::string pack_id;
  std::string version;
  std::vector<StandardChallenge> standard_challenges;
  std::vector<AvatarChallenge> avatar_challenges;
  std::vector<AttributeDescriptor> attributes;
  std::vector<ValuePool> value_pools;
  MessageCatalog messages;
};

// A validated content bundle. Construct through load/parse/from_document.
class ContentPack {
 public:
  ContentPack() = default;

  // Throws ValidationError listing every violation.
  static ContentPack from_document(ContentDocument document);

  const std::string& pack_id() const { return document_.pack_id; }
  const std::string& version() const { return document_.version; }
  const std::vector<StandardChallenge>& standard_challenges() const {
    return document_.standard_challenges;
  }
  const std::vector<AvatarChallenge>& avatar_challenges() const {
    return document_.avatar_challenges;
  }
  const AvatarSchema& schema() const { return schema_; }
  const MessageCatalog& messages() const { return document_.messages; }
  const ContentDocument& document() const { return document_; }

  const StandardChallenge* find_standard(std::string_view id) const;
  const AvatarChallenge* find_avatar(std::string_view id) const;
  // Throws kNotFound.
  Challenge challenge(std::string_view id) const;

  std::vector<const AvatarChallenge*> avatar_challenges_of(
      ChallengeKind kind) const;

 private:
  ContentDocument document_;
  AvatarSchema schema_;
};

// Every ContentPack invariant, collected without stopping at the first.
std::vector<Diagnostic> validate_content(const ContentDocument& document);

// Throws kParseError on malformed text.
ContentDocument parse_content_document(std::string_view text);

// Throws kParseError or ValidationError.
ContentPack parse_content_pack(std::string_view text);
// Throws kIoError, kParseError or ValidationError.
ContentPack load_content_pack(const std::filesystem::path& path);

std::string serialize_content_document(const ContentDocument& document);

// The bundled sample pack (JSON text) and its parsed form.
std::string_view sample_content_text();
const ContentPack& sample_content_pack();

}  // namespace avatar_game

#endif  // AVATAR_GAME_CONTENT_H_
