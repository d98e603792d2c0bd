// epsfkit.cpp - command line driver: inspect, size, and emit for EPS files.

#include <fnmatch.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epsfkit/engine.hpp"

namespace {

using epsfkit::BBoxSource;
using epsfkit::Config;
using epsfkit::Dim;
using epsfkit::Engine;
using epsfkit::Inclusion;
using epsfkit::OutputFormat;
using epsfkit::ScanResult;
using json = nlohmann::ordered_json;

struct Flags {
  bool draft = false;
  bool clip = false;
  bool verbose = false;
  bool show = true;
  bool show_filename = false;
  bool frame = false;
  bool tex_style_log = false;
  bool json_output = false;
  std::string frame_margin = "0pt";
  std::string frame_thickness = "0.4pt";
  std::string width;
  std::string height;
  std::string policy = "default";
  std::string bbox;
  std::vector<std::string> files;
};

epsfkit::BoundingBox parse_bbox_flag(const std::string& text) {
  if (!text.empty() && text.front() == '[')
    return epsfkit::parse_literal_bbox(text);
  return epsfkit::parse_literal_bbox("[" + text + "]");
}

void add_common_flags(CLI::App* cmd, Flags& flags) {
  auto dim_check = CLI::Validator(
      [](std::string& s) {
        try {
          epsfkit::dim_from_literal(s);
        } catch (const std::exception& e) {
          return std::string(e.what());
        }
        return std::string();
      },
      "DIM");
  auto size_check = CLI::Validator(
      [](std::string& s) {
        try {
          if (epsfkit::dim_from_literal(s).sp < 0)
            return std::string("size requests must be non-negative");
        } catch (const std::exception& e) {
          return std::string(e.what());
        }
        return std::string();
      },
      "DIM");
  auto policy_check = CLI::Validator(
      [](std::string& s) {
        try {
          epsfkit::parse_policy(s);
        } catch (const std::exception& e) {
          return std::string(e.what());
        }
        return std::string();
      },
      "POLICY");
  auto bbox_check = CLI::Validator(
      [](std::string& s) {
        try {
          parse_bbox_flag(s);
        } catch (const std::exception& e) {
          return std::string(e.what());
        }
        return std::string();
      },
      "BBOX");

  cmd->add_flag("--draft", flags.draft, "Substitute psdraft.ps for the graphic");
  cmd->add_flag("--clip", flags.clip, "Restrict rendering to the bounding box");
  cmd->add_flag("-v,--verbose", flags.verbose,
                "Report scan diagnostics and status lines on stderr");
  cmd->add_flag("--show,!--no-show", flags.show,
                "Emit the graphic (default) or leave an empty box");
  cmd->add_flag("--show-filename", flags.show_filename,
                "Put a framed filename label in hidden boxes");
  cmd->add_flag("--frame", flags.frame, "Frame the figure");
  cmd->add_flag("--tex-style-log", flags.tex_style_log,
                "Also write \"(file\" / \")\" progress markers under --verbose");
  cmd->add_flag("--json", flags.json_output, "Machine-readable output");
  cmd->add_option("--frame-margin", flags.frame_margin,
                  "Margin between frame and content (dimension literal)")
      ->check(dim_check);
  cmd->add_option("--frame-thickness", flags.frame_thickness,
                  "Frame rule thickness (dimension literal)")
      ->check(dim_check);
  cmd->add_option("--width", flags.width,
                  "Requested width, e.g. 3in or 200bp (0pt = natural)")
      ->check(size_check);
  cmd->add_option("--height", flags.height, "Requested height")
      ->check(size_check);
  cmd->add_option("--policy", flags.policy,
                  "Sizing policy: default | natural-width | scale:<decimal>")
      ->check(policy_check);
  cmd->add_option("--bbox", flags.bbox,
                  "Literal bounding box \"llx lly urx ury\"; skips scanning")
      ->check(bbox_check);
}

Config build_config(const Flags& flags) {
  Config cfg;
  cfg.draft = flags.draft;
  cfg.clip = flags.clip;
  cfg.verbose = flags.verbose || []() {
    const char* env = std::getenv("EPSFKIT_VERBOSE");
    return env != nullptr && std::string_view(env) == "1";
  }();
  cfg.show = flags.show;
  cfg.show_filename = flags.show_filename;
  cfg.frame = flags.frame;
  cfg.tex_style_log = flags.tex_style_log;
  cfg.frame_margin = epsfkit::dim_from_literal(flags.frame_margin);
  cfg.frame_thickness = epsfkit::dim_from_literal(flags.frame_thickness);
  if (!flags.width.empty()) cfg.width = epsfkit::dim_from_literal(flags.width);
  if (!flags.height.empty())
    cfg.height = epsfkit::dim_from_literal(flags.height);
  cfg.policy = epsfkit::parse_policy(flags.policy);
  if (!flags.bbox.empty()) cfg.bbox_override = parse_bbox_flag(flags.bbox);
  cfg.output = flags.json_output ? OutputFormat::Json : OutputFormat::Text;
  return cfg;
}

void print_verbose(const Config& cfg, const Inclusion& inc) {
  if (!cfg.verbose) return;
  if (cfg.tex_style_log) std::cerr << "(" << inc.name << "\n";
  if (inc.scan)
    for (const auto& diag : inc.scan->diagnostics) std::cerr << diag << "\n";
  for (const auto& n : inc.notes) std::cerr << n << "\n";
  std::cerr << inc.status.bbox_line << "\n" << inc.status.size_line << "\n";
  if (cfg.tex_style_log) std::cerr << ")\n";
}

Inclusion include_path(Engine& engine, const std::string& path) {
  if (path == "-") return engine.include_stream(std::cin, "-");
  return engine.include_file(path);
}

json scan_record(const std::string& file, const ScanResult& scan) {
  json rec;
  rec["file"] = file;
  rec["llx"] = scan.bbox.llx.text();
  rec["lly"] = scan.bbox.lly.text();
  rec["urx"] = scan.bbox.urx.text();
  rec["ury"] = scan.bbox.ury.text();
  rec["source"] = std::string(epsfkit::to_string(scan.source));
  rec["atend_seen"] = scan.atend_seen;
  rec["lines_read"] = scan.lines_read;
  rec["diagnostics"] = scan.diagnostics;
  return rec;
}

int cmd_bbox(const Flags& flags, const Config& cfg) {
  int exit_code = 0;
  json records = json::array();
  for (const auto& file : flags.files) {
    std::optional<ScanResult> scan;
    std::string open_error;
    if (cfg.verbose && cfg.tex_style_log) std::cerr << "(" << file << "\n";
    if (file == "-") {
      scan = epsfkit::scan_bounding_box(std::cin, file);
    } else {
      std::ifstream in(file, std::ios::binary);
      if (!in)
        open_error = "Could not open file " + file + ", ignoring it";
      else
        scan = epsfkit::scan_bounding_box(in, file);
    }
    if (!open_error.empty()) {
      std::cerr << open_error << "\n";
      exit_code = std::max(exit_code, 2);
      if (cfg.output == OutputFormat::Json) {
        json rec;
        rec["file"] = file;
        rec["error"] = open_error;
        records.push_back(rec);
      } else {
        std::cout << file << ": could not open\n";
      }
    } else {
      if (cfg.verbose)
        for (const auto& diag : scan->diagnostics) std::cerr << diag << "\n";
      if (scan->source != BBoxSource::Found) exit_code = std::max(exit_code, 1);
      if (cfg.output == OutputFormat::Json) {
        records.push_back(scan_record(file, *scan));
      } else {
        std::cout << file << ": BoundingBox: llx = " << scan->bbox.llx.text()
                  << " lly = " << scan->bbox.lly.text()
                  << " urx = " << scan->bbox.urx.text()
                  << " ury = " << scan->bbox.ury.text() << "\n";
        std::cout << file << ": source = " << epsfkit::to_string(scan->source)
                  << " atend_seen = " << (scan->atend_seen ? "true" : "false")
                  << " lines_read = " << scan->lines_read << "\n";
      }
    }
    if (cfg.verbose && cfg.tex_style_log) std::cerr << ")\n";
  }
  if (cfg.output == OutputFormat::Json) {
    json doc;
    doc["schema"] = 1;
    doc["records"] = records;
    std::cout << doc.dump() << "\n";
  }
  return exit_code;
}

int cmd_size(const Flags& flags, const Config& cfg) {
  Engine engine(cfg);
  Inclusion inc = include_path(engine, flags.files.front());
  print_verbose(cfg, inc);
  if (inc.open_error) {
    std::cerr << *inc.open_error << "\n";
    return 2;
  }
  if (cfg.output == OutputFormat::Json) {
    json doc;
    doc["schema"] = 1;
    doc["file"] = inc.name;
    doc["width_pt"] = epsfkit::print_scaled(inc.size.width);
    doc["width_sp"] = inc.size.width.sp;
    doc["height_pt"] = epsfkit::print_scaled(inc.size.height);
    doc["height_sp"] = inc.size.height.sp;
    doc["rhi_needed"] = inc.size.rhi_needed;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << inc.status.size_line << "\n";
    std::cout << inc.name << ": width = " << inc.size.width.sp
              << "sp height = " << inc.size.height.sp
              << "sp rhi_needed = " << (inc.size.rhi_needed ? "true" : "false")
              << "\n";
  }
  return 0;
}

int cmd_special(const Flags& flags, const Config& cfg) {
  Engine engine(cfg);
  Inclusion inc = include_path(engine, flags.files.front());
  print_verbose(cfg, inc);
  if (inc.open_error) {
    std::cerr << *inc.open_error << "\n";
    return 2;
  }
  if (cfg.output == OutputFormat::Json) {
    json doc;
    doc["schema"] = 1;
    doc["file"] = inc.name;
    doc["special"] = inc.special;
    doc["rwi"] = 10 * inc.size.width.sp / epsfkit::kPsPoints.sp;
    if (inc.size.rhi_needed)
      doc["rhi"] = 10 * inc.size.height.sp / epsfkit::kPsPoints.sp;
    else
      doc["rhi"] = nullptr;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << inc.special << "\n";
  }
  return 0;
}

int cmd_frame(const Flags& flags, const Config& cfg) {
  Engine engine(cfg);
  Inclusion inc = include_path(engine, flags.files.front());
  print_verbose(cfg, inc);
  if (inc.open_error) {
    std::cerr << *inc.open_error << "\n";
    return 2;
  }
  epsfkit::FrameSpec spec{cfg.frame_margin, cfg.frame_thickness};
  epsfkit::FrameBox box =
      epsfkit::frame_geometry(inc.size.width, inc.size.height, spec);
  if (cfg.output == OutputFormat::Json) {
    json doc;
    doc["schema"] = 1;
    doc["file"] = inc.name;
    doc["outer_width_pt"] = epsfkit::print_scaled(box.outer_w);
    doc["outer_width_sp"] = box.outer_w.sp;
    doc["outer_height_pt"] = epsfkit::print_scaled(box.outer_h);
    doc["outer_height_sp"] = box.outer_h.sp;
    doc["content_offset_pt"] = epsfkit::print_scaled(box.content_offset_x);
    doc["content_offset_sp"] = box.content_offset_x.sp;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << inc.name << ": outer width = " << epsfkit::print_scaled(box.outer_w)
              << "pt outer height = " << epsfkit::print_scaled(box.outer_h)
              << "pt\n";
    std::cout << inc.name << ": outer width = " << box.outer_w.sp
              << "sp outer height = " << box.outer_h.sp
              << "sp content offset = " << box.content_offset_x.sp << "sp\n";
  }
  return 0;
}

std::vector<std::string> expand_manifest_line(const std::string& line) {
  if (line.find_first_of("*?[") == std::string::npos) return {line};
  namespace fs = std::filesystem;
  auto slash = line.find_last_of('/');
  std::string dir = slash == std::string::npos ? "" : line.substr(0, slash);
  std::string pattern =
      slash == std::string::npos ? line : line.substr(slash + 1);
  std::vector<std::string> matches;
  std::error_code ec;
  for (const auto& entry :
       fs::directory_iterator(dir.empty() ? "." : dir, ec)) {
    std::string name = entry.path().filename().string();
    if (fnmatch(pattern.c_str(), name.c_str(), 0) == 0)
      matches.push_back(dir.empty() ? name : dir + "/" + name);
  }
  std::sort(matches.begin(), matches.end());
  // A pattern that matches nothing is kept so it surfaces as an open error.
  if (matches.empty()) matches.push_back(line);
  return matches;
}

int cmd_batch(const Flags& flags, const Config& cfg) {
  const std::string& manifest = flags.files.front();
  std::ifstream manifest_file;
  std::istream* in = &std::cin;
  if (manifest != "-") {
    manifest_file.open(manifest);
    if (!manifest_file) {
      std::cerr << "Could not open file " << manifest << ", ignoring it\n";
      return 2;
    }
    in = &manifest_file;
  }
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (auto& path : expand_manifest_line(line)) entries.push_back(path);
  }

  int exit_code = 0;
  std::size_t found = 0, defaulted = 0, deferred = 0, errors = 0;
  for (const auto& file : entries) {
    int code = 0;
    json rec;
    rec["schema"] = 1;
    rec["file"] = file;
    try {
      Engine engine(cfg);
      Inclusion inc = include_path(engine, file);
      print_verbose(cfg, inc);
      if (inc.open_error) {
        std::cerr << *inc.open_error << "\n";
        ++errors;
        code = 2;
        rec["error"] = *inc.open_error;
      } else {
        if (inc.scan) {
          switch (inc.scan->source) {
            case BBoxSource::Found:
              ++found;
              break;
            case BBoxSource::Defaulted:
              ++defaulted;
              code = 1;
              break;
            case BBoxSource::DeferredUnresolved:
              ++deferred;
              code = 1;
              break;
          }
          rec["llx"] = inc.bbox.llx.text();
          rec["lly"] = inc.bbox.lly.text();
          rec["urx"] = inc.bbox.urx.text();
          rec["ury"] = inc.bbox.ury.text();
          rec["source"] = std::string(epsfkit::to_string(inc.scan->source));
          rec["atend_seen"] = inc.scan->atend_seen;
          rec["lines_read"] = inc.scan->lines_read;
          rec["diagnostics"] = inc.scan->diagnostics;
        } else {
          ++found;
          rec["llx"] = inc.bbox.llx.text();
          rec["lly"] = inc.bbox.lly.text();
          rec["urx"] = inc.bbox.urx.text();
          rec["ury"] = inc.bbox.ury.text();
          rec["source"] = "literal";
        }
        rec["width_pt"] = epsfkit::print_scaled(inc.size.width);
        rec["width_sp"] = inc.size.width.sp;
        rec["height_pt"] = epsfkit::print_scaled(inc.size.height);
        rec["height_sp"] = inc.size.height.sp;
        rec["rhi_needed"] = inc.size.rhi_needed;
        rec["special"] = inc.special;
        if (cfg.output != OutputFormat::Json) {
          std::cout << file << ": "
                    << (inc.scan ? epsfkit::to_string(inc.scan->source)
                                 : std::string_view("literal"))
                    << " width = " << epsfkit::print_scaled(inc.size.width)
                    << "pt height = " << epsfkit::print_scaled(inc.size.height)
                    << "pt\n";
        }
      }
    } catch (const epsfkit::DivideByZeroError& e) {
      std::cerr << "epsfkit: " << file << ": " << e.what() << "\n";
      ++errors;
      code = 3;
      rec["error"] = e.what();
    } catch (const epsfkit::OverflowError& e) {
      std::cerr << "epsfkit: " << file << ": " << e.what() << "\n";
      ++errors;
      code = 3;
      rec["error"] = e.what();
    }
    if (cfg.output == OutputFormat::Json) std::cout << rec.dump() << "\n";
    if (cfg.output != OutputFormat::Json && rec.contains("error"))
      std::cout << file << ": error\n";
    exit_code = std::max(exit_code, code);
  }
  if (cfg.output == OutputFormat::Json) {
    json summary;
    summary["schema"] = 1;
    summary["summary"] = {{"files", entries.size()},
                          {"found", found},
                          {"defaulted", defaulted},
                          {"deferred", deferred},
                          {"errors", errors}};
    summary["exit_code"] = exit_code;
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << "summary: " << entries.size() << " files, " << found
              << " found, " << defaulted << " defaulted, " << deferred
              << " deferred, " << errors << " errors\n";
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EPS bounding-box scanner and dvips special generator"};
  app.require_subcommand(1);

  Flags flags;
  auto* bbox_cmd =
      app.add_subcommand("bbox", "Scan files for %%BoundingBox comments");
  bbox_cmd->add_option("files", flags.files, "EPS files (or - for stdin)")
      ->required();
  auto* size_cmd =
      app.add_subcommand("size", "Resolve the final figure dimensions");
  size_cmd->add_option("file", flags.files, "EPS file (or - for stdin)")
      ->required()
      ->expected(1);
  auto* special_cmd =
      app.add_subcommand("special", "Emit the dvips special line");
  special_cmd->add_option("file", flags.files, "EPS file (or - for stdin)")
      ->required()
      ->expected(1);
  auto* frame_cmd =
      app.add_subcommand("frame", "Report frame geometry around the figure");
  frame_cmd->add_option("file", flags.files, "EPS file (or - for stdin)")
      ->required()
      ->expected(1);
  auto* batch_cmd =
      app.add_subcommand("batch", "Process a manifest of files (one per line)");
  batch_cmd->add_option("manifest", flags.files,
                        "Manifest path (or - for stdin); lines may be globs")
      ->required()
      ->expected(1);
  for (auto* cmd : {bbox_cmd, size_cmd, special_cmd, frame_cmd, batch_cmd})
    add_common_flags(cmd, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg = build_config(flags);
    if (bbox_cmd->parsed()) return cmd_bbox(flags, cfg);
    if (size_cmd->parsed()) return cmd_size(flags, cfg);
    if (special_cmd->parsed()) return cmd_special(flags, cfg);
    if (frame_cmd->parsed()) return cmd_frame(flags, cfg);
    if (batch_cmd->parsed()) return cmd_batch(flags, cfg);
  } catch (const epsfkit::DivideByZeroError& e) {
    std::cerr << "epsfkit: " << e.what() << "\n";
    return 3;
  } catch (const epsfkit::OverflowError& e) {
    std::cerr << "epsfkit: " << e.what() << "\n";
    return 3;
  } catch (const epsfkit::ParseError& e) {
    std::cerr << "epsfkit: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
