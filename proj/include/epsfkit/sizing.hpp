// sizing.hpp - resolves figure dimensions from a bounding box and user
// constraints, plus frame and placeholder geometry.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "epsfkit/dscscan.hpp"
#include "epsfkit/fixdim.hpp"

namespace epsfkit {

struct SizeRequest;

// User hook mapping the natural width/height to a requested width; the
// default returns the request's own width register.
using SizingPolicy =
    std::function<Dim(Dim natural_w, Dim natural_h, const SizeRequest&)>;

struct SizeRequest {
  Dim want_x{};  // 0 = unset
  Dim want_y{};  // 0 = unset
  SizingPolicy policy;  // empty behaves like default_sizing_policy()
};

SizingPolicy default_sizing_policy();
SizingPolicy natural_width_policy();
SizingPolicy scale_policy(Decimal factor);

// "default" | "natural-width" | "scale:<decimal>"; throws ParseError.
SizingPolicy parse_policy(std::string_view spec);

// Natural extent of the bounding box: width = urx*1bp - llx*1bp and the
// same for height, exact in sp.
struct NaturalSize {
  Dim width{};
  Dim height{};
};

struct ResolvedSize {
  Dim width{};
  Dim height{};
  // Set exactly when both axes were explicitly constrained; drives the
  // rhi= field of the emitted special.
  bool rhi_needed = false;
};

// margin and thickness around framed content; defaults 0pt / 0.4pt.
struct FrameSpec {
  Dim margin{0};
  Dim thickness{26214};
};

struct FrameBox {
  Dim outer_w{};
  Dim outer_h{};
  Dim content_offset_x{};  // margin + thickness
  Dim content_offset_y{};
};

struct LayoutOptions {
  bool show = true;
  bool show_filename = false;
  bool frame = false;
  FrameSpec frame_spec;
  std::string filename;
};

// Declarative box of exactly the resolved size: either the graphic payload,
// an empty placeholder, or a framed filename label (3pt margin).
struct LayoutNode {
  Dim width{};
  Dim height{};
  enum class Body { Graphic, Empty, FilenameLabel };
  Body body = Body::Empty;
  std::string filename;
  std::optional<FrameSpec> label_frame;
  std::optional<FrameBox> frame;
};

// Negative extents (inverted boxes) propagate, with a note when `notes` is
// given. Throws OverflowError past the dimension bound.
NaturalSize natural_size(const BoundingBox& bbox,
                         std::vector<std::string>* notes = nullptr);

// Computes avail*(num/den) by binary long division, bit for bit the way the
// register loop does it: take the integer quotient first, then accept
// halvings of avail while doubling the remainder. Exact TeX operation
// semantics, including truncation; den must be nonzero. Doubling the
// remainder may transiently pass kMaxDimen, which is recorded in `notes`
// instead of failing.
Dim scale_to_fit(Dim avail, Dim num, Dim den,
                 std::vector<std::string>* notes = nullptr);

// The four-way branch on (width set?, height set?): both unset gives the
// natural size, one set scales the other axis proportionally via
// scale_to_fit, both set passes through and flags rhi_needed.
ResolvedSize resolve_size(const NaturalSize& nat, const SizeRequest& req,
                          std::vector<std::string>* notes = nullptr);

// outer = content + 2*margin + 2*thickness per axis.
FrameBox frame_geometry(Dim content_w, Dim content_h, const FrameSpec& spec);

// Pure layout; the caller owns the post-state contract of resetting its
// pending size request afterwards.
LayoutNode layout_graph(const ResolvedSize& resolved,
                        const LayoutOptions& opts);

}  // namespace epsfkit
