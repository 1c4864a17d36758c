#pragma once

#include <string>
#include <string_view>

namespace hypermediator {

/// URL- and file-name-safe form of an identifier: spaces become '-', and
/// every byte outside [A-Za-z0-9_~] is percent-encoded (including '-' and
/// '.', so the mapping stays injective and never yields "." or "..").
std::string slugify(std::string_view id);

/// Inverse of slugify. Invalid escapes are kept literally.
std::string unslugify(std::string_view slug);

}  // namespace hypermediator
