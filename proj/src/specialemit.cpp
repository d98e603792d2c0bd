// specialemit.cpp - byte-exact dvips special and status formatting.

#include "epsfkit/specialemit.hpp"

namespace epsfkit {

namespace {

// width in tenths of a bp; computed wide so oversized dimensions still emit.
std::int64_t tenth_bp(Dim d, std::vector<std::string>* notes,
                      const char* axis) {
  std::int64_t tenfold = 10 * d.sp;
  if ((tenfold > kMaxDimen || tenfold < -kMaxDimen) && notes)
    notes->push_back(std::string("scaled ") + axis +
                     " exceeds 1638.3pt; the original arithmetic would have "
                     "overflowed computing the special");
  return tenfold / kPsPoints.sp;
}

}  // namespace

std::string emit_special(const SpecialRequest& req,
                         std::vector<std::string>* notes) {
  if (notes && req.filename.find(' ') != std::string::npos)
    notes->push_back("filename '" + req.filename +
                     "' contains a space, which the special grammar cannot "
                     "represent");
  std::string out = "PSfile=";
  out += req.draft ? "psdraft.ps" : req.filename;
  out += " llx=" + req.bbox.llx.text();
  out += " lly=" + req.bbox.lly.text();
  out += " urx=" + req.bbox.urx.text();
  out += " ury=" + req.bbox.ury.text();
  out += " rwi=" + std::to_string(tenth_bp(req.resolved.width, notes, "width"));
  if (req.resolved.rhi_needed)
    out +=
        " rhi=" + std::to_string(tenth_bp(req.resolved.height, notes, "height"));
  if (req.clip == ClipMode::ClipOn ||
      (req.clip == ClipMode::ClipOff && req.draft))
    out += " clip";
  return out;
}

StatusReport emit_status(std::string_view filename, const BoundingBox& bbox,
                         const ResolvedSize& resolved) {
  StatusReport report;
  report.bbox_line = std::string(filename) + ": BoundingBox: llx = " +
                     bbox.llx.text() + " lly = " + bbox.lly.text() +
                     " urx = " + bbox.urx.text() + " ury = " + bbox.ury.text();
  report.size_line = std::string(filename) +
                     ": scaled width = " + print_scaled(resolved.width) +
                     "pt scaled height = " + print_scaled(resolved.height) +
                     "pt";
  return report;
}

}  // namespace epsfkit
