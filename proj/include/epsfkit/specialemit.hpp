// specialemit.hpp - renders dvips \special payloads and status lines.

#pragma once

#include <string>
#include <vector>

#include "epsfkit/dscscan.hpp"
#include "epsfkit/sizing.hpp"

namespace epsfkit {

enum class ClipMode { ClipOn, ClipOff };

struct SpecialRequest {
  std::string filename;
  BoundingBox bbox;  // raw tokens, emitted verbatim
  ResolvedSize resolved;
  bool draft = false;
  ClipMode clip = ClipMode::ClipOff;
};

// One line, single spaces, bit-exact:
//   PSfile=<name> llx=<llx> lly=<lly> urx=<urx> ury=<ury> rwi=<rwi>[ rhi=<rhi>][ clip]
// rwi/rhi are the resolved width/height in tenths of a big point
// (truncating division); <name> is psdraft.ps under draft mode. The clip
// suffix appears for ClipOn, or for ClipOff under draft. Widths past the
// dimension bound are still emitted, with a note in `notes`, as is a
// filename containing spaces (the grammar cannot represent one).
std::string emit_special(const SpecialRequest& req,
                         std::vector<std::string>* notes = nullptr);

// The two verbose report lines for one inclusion.
struct StatusReport {
  std::string bbox_line;  // "<file>: BoundingBox: llx = ... ury = ..."
  std::string size_line;  // "<file>: scaled width = ...pt scaled height = ...pt"
};

StatusReport emit_status(std::string_view filename, const BoundingBox& bbox,
                         const ResolvedSize& resolved);

}  // namespace epsfkit
