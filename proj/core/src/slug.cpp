#include "hypermediator/slug.hpp"

namespace hypermediator {

namespace {

bool is_plain(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '~';
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

std::string slugify(std::string_view id) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(id.size());
  for (const char ch : id) {
    const auto c = static_cast<unsigned char>(ch);
    if (c == ' ') {
      out += '-';
    } else if (is_plain(c)) {
      out += ch;
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

std::string unslugify(std::string_view slug) {
  std::string out;
  out.reserve(slug.size());
  for (std::size_t i = 0; i < slug.size(); ++i) {
    if (slug[i] == '-') {
      out += ' ';
    } else if (slug[i] == '%' && i + 2 < slug.size() && hex_value(slug[i + 1]) >= 0 &&
               hex_value(slug[i + 2]) >= 0) {
      out += static_cast<char>(hex_value(slug[i + 1]) * 16 + hex_value(slug[i + 2]));
      i += 2;
    } else {
      out += slug[i];
    }
  }
  return out;
}

}  // namespace hypermediator
