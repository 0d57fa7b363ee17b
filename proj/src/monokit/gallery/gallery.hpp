#ifndef MONOKIT_GALLERY_GALLERY_HPP
#define MONOKIT_GALLERY_GALLERY_HPP

#include <string>
#include <vector>

#include "monokit/gallery/root2.hpp"
#include "monokit/gallery/seq.hpp"
#include "monokit/scalar.hpp"

namespace monokit {

// One verified statement: pass iff expected == computed exactly (verdicts
// are rendered as "true"/"false").
struct GalleryClaim {
  std::string what;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct GalleryReport {
  std::string name;
  std::vector<GalleryClaim> claims;
  std::vector<std::string> notes;

  bool pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

std::vector<std::string> gallery_names();
GalleryReport gallery_report(const std::string& name);

// The sequences behind the gossez-4-5 report, exported for the
// window-relatedness cross-check in the monotonicity suite.
GeomSeq gossez_z();
GeomSeq gossez_e();
std::vector<GeomSeq> gossez_u_suite();

}  // namespace monokit

#endif
