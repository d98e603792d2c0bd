// dscscan.cpp - line scanner for DSC BoundingBox comments.

#include "epsfkit/dscscan.hpp"

#include <istream>

namespace epsfkit {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\f' || c == '\v' || c == '\r' ||
         c == '\n';
}

std::vector<std::string_view> split_tokens(std::string_view payload) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < payload.size()) {
    while (i < payload.size() && is_ascii_space(payload[i])) ++i;
    std::size_t begin = i;
    while (i < payload.size() && !is_ascii_space(payload[i])) ++i;
    if (i > begin) tokens.push_back(payload.substr(begin, i - begin));
  }
  return tokens;
}

}  // namespace

BoundingBox default_bounding_box() {
  return BoundingBox{Decimal::parse("72"), Decimal::parse("72"),
                     Decimal::parse("540"), Decimal::parse("720")};
}

std::string_view to_string(BBoxSource source) {
  switch (source) {
    case BBoxSource::Found:
      return "found";
    case BBoxSource::Defaulted:
      return "defaulted";
    case BBoxSource::DeferredUnresolved:
      return "deferred-unresolved";
  }
  return "unknown";
}

BBoxParse parse_bbox_tokens(std::string_view payload) {
  BBoxParse out;
  auto tokens = split_tokens(payload);
  if (!tokens.empty() && tokens[0] == kAtEndMarker) {
    out.kind = BBoxParse::Kind::AtEnd;
    return out;
  }
  if (tokens.size() < 4) {
    out.error = "expected four coordinates";
    return out;
  }
  Decimal coords[4];
  for (int i = 0; i < 4; ++i) {
    auto parsed = Decimal::try_parse(tokens[i]);
    if (!parsed) {
      out.error = "coordinate '" + std::string(tokens[i]) + "' is not a number";
      return out;
    }
    coords[i] = *parsed;
  }
  out.kind = BBoxParse::Kind::Coords;
  out.bbox = BoundingBox{coords[0], coords[1], coords[2], coords[3]};
  return out;
}

BoundingBox parse_literal_bbox(std::string_view spec) {
  if (spec.empty() || spec.front() != '[' || spec.back() != ']')
    throw ParseError("Literal bounding box must be of the form "
                     "\"[llx lly urx ury]\"");
  auto tokens = split_tokens(spec.substr(1, spec.size() - 2));
  if (tokens.size() != 4)
    throw ParseError("Literal bounding box needs exactly four coordinates");
  Decimal coords[4];
  for (int i = 0; i < 4; ++i) {
    auto parsed = Decimal::try_parse(tokens[i]);
    if (!parsed)
      throw ParseError("Bad coordinate '" + std::string(tokens[i]) +
                       "' in literal bounding box");
    coords[i] = *parsed;
  }
  return BoundingBox{coords[0], coords[1], coords[2], coords[3]};
}

bool read_raw_line(std::istream& in, std::string& line) {
  line.clear();
  int ch = in.get();
  if (ch == std::char_traits<char>::eof()) return false;
  while (ch != std::char_traits<char>::eof()) {
    if (ch == '\n') break;
    if (ch == '\r') {
      if (in.peek() == '\n') in.get();
      break;
    }
    line.push_back(static_cast<char>(ch));
    ch = in.get();
  }
  return true;
}

ScanResult scan_bounding_box(std::istream& in, std::string_view name) {
  ScanResult result;
  result.bbox = default_bounding_box();
  bool found = false;
  std::string line;
  while (read_raw_line(in, line)) {
    ++result.lines_read;
    if (!line.starts_with(kBoundingBoxHeader)) continue;
    auto parsed = parse_bbox_tokens(
        std::string_view(line).substr(kBoundingBoxHeader.size()));
    switch (parsed.kind) {
      case BBoxParse::Kind::AtEnd:
        result.atend_seen = true;
        break;
      case BBoxParse::Kind::Malformed:
        result.diagnostics.push_back("Malformed BoundingBox line in file " +
                                     std::string(name) + ": " + parsed.error);
        break;
      case BBoxParse::Kind::Coords:
        result.bbox = parsed.bbox;
        found = true;
        break;
    }
    // First concrete box stops the scan unless (atend) deferred it, in
    // which case the last one before EOF wins.
    if (found && !result.atend_seen) break;
  }
  if (found) {
    result.source = BBoxSource::Found;
  } else if (result.atend_seen) {
    result.source = BBoxSource::DeferredUnresolved;
    result.diagnostics.push_back("BoundingBox (atend) never resolved in file " +
                                 std::string(name) + "; using defaults");
  } else {
    result.source = BBoxSource::Defaulted;
    result.diagnostics.push_back("No BoundingBox comment found in file " +
                                 std::string(name) + "; using defaults");
  }
  return result;
}

}  // namespace epsfkit
