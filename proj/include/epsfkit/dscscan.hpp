// dscscan.hpp - %%BoundingBox extraction from EPS byte streams.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "epsfkit/fixdim.hpp"

namespace epsfkit {

// Four signed decimal coordinates in big points, kept verbatim as scanned.
// No ordering between corners is enforced.
struct BoundingBox {
  Decimal llx, lly, urx, ury;
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// The fallback box used when a file carries no usable %%BoundingBox.
BoundingBox default_bounding_box();  // 72 72 540 720

inline constexpr std::string_view kBoundingBoxHeader = "%%BoundingBox:";
inline constexpr std::string_view kAtEndMarker = "(atend)";

enum class BBoxSource { Found, Defaulted, DeferredUnresolved };
std::string_view to_string(BBoxSource source);

struct ScanResult {
  BoundingBox bbox;
  BBoxSource source = BBoxSource::Defaulted;
  bool atend_seen = false;
  std::size_t lines_read = 0;
  std::vector<std::string> diagnostics;
  friend bool operator==(const ScanResult&, const ScanResult&) = default;
};

// Outcome of tokenizing the text after "%%BoundingBox:".
struct BBoxParse {
  enum class Kind { Coords, AtEnd, Malformed };
  Kind kind = Kind::Malformed;
  BoundingBox bbox;   // valid for Coords
  std::string error;  // valid for Malformed
};

// Splits the payload on runs of ASCII whitespace, discarding empty tokens.
// "(atend)" as the first token wins; otherwise the first four tokens must be
// signed decimals (trailing extras are ignored).
BBoxParse parse_bbox_tokens(std::string_view payload);

// Parses the bracketed literal form "[llx lly urx ury]"; callers use it to
// bypass file scanning entirely. Throws ParseError on malformed input.
BoundingBox parse_literal_bbox(std::string_view spec);

// Reads one line, accepting LF, CRLF, and lone CR terminators; consumes no
// bytes past the terminator. Returns false at end of stream.
bool read_raw_line(std::istream& in, std::string& line);

// Reads lines until the first concrete %%BoundingBox (which stops the scan
// immediately) unless an "(atend)" marker was seen first, in which case the
// last concrete box before EOF wins. A header line must start at column 0,
// case-sensitively. `name` only labels diagnostics.
ScanResult scan_bounding_box(std::istream& in, std::string_view name);

}  // namespace epsfkit
