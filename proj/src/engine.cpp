// engine.cpp - the inclusion pipeline.

#include "epsfkit/engine.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

namespace epsfkit {

Engine::Engine(Config config)
    : config_(std::move(config)),
      want_x_(config_.width),
      want_y_(config_.height) {
  if (want_x_.sp < 0 || want_y_.sp < 0)
    throw std::invalid_argument("size requests must be non-negative");
}

void Engine::set_width(Dim width) {
  if (width.sp < 0)
    throw std::invalid_argument("size requests must be non-negative");
  want_x_ = width;
}

void Engine::set_height(Dim height) {
  if (height.sp < 0)
    throw std::invalid_argument("size requests must be non-negative");
  want_y_ = height;
}

Inclusion Engine::include_file(const std::string& path) {
  if (config_.bbox_override)
    return include_literal(*config_.bbox_override, path);
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    Inclusion inc;
    inc.name = path;
    inc.open_error = "Could not open file " + path + ", ignoring it";
    inc.bbox = default_bounding_box();
    return finish(std::move(inc));
  }
  return include_stream(file, path);
}

Inclusion Engine::include_stream(std::istream& in, std::string name) {
  if (config_.bbox_override)
    return include_literal(*config_.bbox_override, std::move(name));
  Inclusion inc;
  inc.name = std::move(name);
  inc.scan = scan_bounding_box(in, inc.name);
  inc.bbox = inc.scan->bbox;
  return finish(std::move(inc));
}

Inclusion Engine::include_literal(const BoundingBox& bbox, std::string name) {
  Inclusion inc;
  inc.name = std::move(name);
  inc.bbox = bbox;
  return finish(std::move(inc));
}

Inclusion Engine::finish(Inclusion inc) {
  inc.natural = natural_size(inc.bbox, &inc.notes);
  SizeRequest request{want_x_, want_y_, config_.policy};
  inc.size = resolve_size(inc.natural, request, &inc.notes);
  inc.status = emit_status(inc.name, inc.bbox, inc.size);

  SpecialRequest special{inc.name, inc.bbox, inc.size, config_.draft,
                         config_.clip ? ClipMode::ClipOn : ClipMode::ClipOff};
  inc.special = emit_special(special, &inc.notes);

  LayoutOptions opts;
  opts.show = config_.show;
  opts.show_filename = config_.show_filename;
  opts.frame = config_.frame;
  opts.frame_spec = FrameSpec{config_.frame_margin, config_.frame_thickness};
  opts.filename = inc.name;
  inc.layout = layout_graph(inc.size, opts);

  // Placement consumes the request.
  want_x_ = Dim{0};
  want_y_ = Dim{0};
  return inc;
}

}  // namespace epsfkit
