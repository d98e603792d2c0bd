// sizing.cpp - proportional scaling and frame geometry.

#include "epsfkit/sizing.hpp"

namespace epsfkit {

namespace {

Dim bp_scale(const Decimal& coordinate) {
  return dim_scale_decimal(kPsPoints, coordinate);
}

void note(std::vector<std::string>* notes, std::string text) {
  if (notes) notes->push_back(std::move(text));
}

}  // namespace

SizingPolicy default_sizing_policy() {
  return [](Dim, Dim, const SizeRequest& req) { return req.want_x; };
}

SizingPolicy natural_width_policy() {
  return [](Dim natural_w, Dim, const SizeRequest&) { return natural_w; };
}

SizingPolicy scale_policy(Decimal factor) {
  return [factor](Dim natural_w, Dim, const SizeRequest&) {
    return dim_scale_decimal(natural_w, factor);
  };
}

SizingPolicy parse_policy(std::string_view spec) {
  if (spec == "default") return default_sizing_policy();
  if (spec == "natural-width") return natural_width_policy();
  if (spec.starts_with("scale:"))
    return scale_policy(Decimal::parse(spec.substr(6)));
  throw ParseError("Unknown sizing policy '" + std::string(spec) +
                   "' (expected default, natural-width, or scale:<decimal>)");
}

NaturalSize natural_size(const BoundingBox& bbox,
                         std::vector<std::string>* notes) {
  NaturalSize nat;
  nat.width = dim_sub(bp_scale(bbox.urx), bp_scale(bbox.llx));
  nat.height = dim_sub(bp_scale(bbox.ury), bp_scale(bbox.lly));
  if (nat.width.sp < 0)
    note(notes, "natural width is negative (inverted bounding box)");
  if (nat.height.sp < 0)
    note(notes, "natural height is negative (inverted bounding box)");
  return nat;
}

Dim scale_to_fit(Dim avail, Dim num, Dim den,
                 std::vector<std::string>* notes) {
  if (den.sp == 0)
    throw DivideByZeroError("Division by zero scaling to a zero-extent axis");
  std::int64_t quotient = num.sp / den.sp;
  std::int64_t acc = avail.sp * quotient;  // |num/den| <= 2^30 keeps this safe
  if (acc > kMaxDimen || acc < -kMaxDimen) throw OverflowError("Arithmetic overflow");
  std::int64_t rem = num.sp - quotient * den.sp;
  std::int64_t tmp = avail.sp;
  bool wide_noted = false;
  for (;;) {
    rem += rem;
    if (!wide_noted && (rem > kMaxDimen || rem < -kMaxDimen)) {
      note(notes, "intermediate remainder passed the maximum dimension; the "
                  "original arithmetic would have overflowed here");
      wide_noted = true;
    }
    tmp /= 2;
    if (tmp == 0) break;
    if (rem >= den.sp) {
      rem -= den.sp;
      acc += tmp;
      if (acc > kMaxDimen || acc < -kMaxDimen)
        throw OverflowError("Arithmetic overflow");
    }
  }
  return Dim{acc};
}

ResolvedSize resolve_size(const NaturalSize& nat, const SizeRequest& req,
                          std::vector<std::string>* notes) {
  Dim x = req.policy ? req.policy(nat.width, nat.height, req)
                     : req.want_x;
  ResolvedSize out;
  if (x.sp == 0) {
    if (req.want_y.sp == 0) {
      out.width = nat.width;
      out.height = nat.height;
    } else {
      out.width = scale_to_fit(req.want_y, nat.width, nat.height, notes);
      out.height = req.want_y;
    }
  } else {
    if (req.want_y.sp == 0) {
      out.width = x;
      out.height = scale_to_fit(x, nat.height, nat.width, notes);
    } else {
      out.width = x;
      out.height = req.want_y;
      out.rhi_needed = true;
    }
  }
  return out;
}

FrameBox frame_geometry(Dim content_w, Dim content_h, const FrameSpec& spec) {
  FrameBox box;
  Dim pad = dim_add(dim_mul(spec.margin, 2), dim_mul(spec.thickness, 2));
  box.outer_w = dim_add(content_w, pad);
  box.outer_h = dim_add(content_h, pad);
  box.content_offset_x = dim_add(spec.margin, spec.thickness);
  box.content_offset_y = box.content_offset_x;
  return box;
}

LayoutNode layout_graph(const ResolvedSize& resolved,
                        const LayoutOptions& opts) {
  LayoutNode node;
  node.width = resolved.width;
  node.height = resolved.height;
  if (opts.show) {
    node.body = LayoutNode::Body::Graphic;
    node.filename = opts.filename;
  } else if (opts.show_filename) {
    node.body = LayoutNode::Body::FilenameLabel;
    node.filename = opts.filename;
    node.label_frame =
        FrameSpec{dim_from_literal("3pt"), opts.frame_spec.thickness};
  } else {
    node.body = LayoutNode::Body::Empty;
  }
  if (opts.frame)
    node.frame = frame_geometry(resolved.width, resolved.height,
                                opts.frame_spec);
  return node;
}

}  // namespace epsfkit
