// engine.hpp - stateful inclusion facade: scan, size, report, lay out, and
// reset the pending size request, one figure at a time.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "epsfkit/dscscan.hpp"
#include "epsfkit/fixdim.hpp"
#include "epsfkit/sizing.hpp"
#include "epsfkit/specialemit.hpp"

namespace epsfkit {

enum class OutputFormat { Text, Json };

// Mirrors the engine's toggles and registers; the defaults are the
// register-file initial values (show on, draft/clip off, 0pt margin,
// 0.4pt rule thickness, both size requests unset).
struct Config {
  bool draft = false;
  bool clip = false;
  bool verbose = false;
  bool show = true;
  bool show_filename = false;
  bool frame = false;
  bool tex_style_log = false;
  Dim frame_margin{0};
  Dim frame_thickness{26214};
  Dim width{0};
  Dim height{0};
  SizingPolicy policy;
  std::optional<BoundingBox> bbox_override;
  OutputFormat output = OutputFormat::Text;
};

// Everything one inclusion produced.
struct Inclusion {
  std::string name;
  std::optional<std::string> open_error;  // set when the file would not open
  std::optional<ScanResult> scan;         // absent on the literal-bbox path
  BoundingBox bbox;                       // effective box (scanned or default)
  NaturalSize natural;
  ResolvedSize size;
  StatusReport status;
  LayoutNode layout;
  std::string special;
  std::vector<std::string> notes;  // sizing/emission fidelity notes
};

class Engine {
 public:
  explicit Engine(Config config);

  // Pending size request for the next inclusion; negative values are
  // rejected. Each inclusion consumes the request and resets both axes to
  // unset, so constraints never leak into the next figure.
  void set_width(Dim width);
  void set_height(Dim height);
  Dim pending_width() const { return want_x_; }
  Dim pending_height() const { return want_y_; }

  // Opens and scans `path` (binary). An unopenable file is reported in
  // Inclusion::open_error and the inclusion proceeds on the default box.
  // With Config::bbox_override set, the file is never opened.
  Inclusion include_file(const std::string& path);

  // Same, for an already-open byte stream (stdin).
  Inclusion include_stream(std::istream& in, std::string name);

  // The literal-bbox path: no scanning at all.
  Inclusion include_literal(const BoundingBox& bbox, std::string name);

  const Config& config() const { return config_; }

 private:
  Inclusion finish(Inclusion inclusion);

  Config config_;
  Dim want_x_;
  Dim want_y_;
};

}  // namespace epsfkit
