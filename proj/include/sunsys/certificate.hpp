#pragma once

#include <string>

#include "sunsys/lemmas.hpp"
#include "sunsys/verify.hpp"

namespace sunsys {

inline constexpr int kCertificateFormatVersion = 1;

// On-disk witness of a decomposition. Kinds:
//   "complete" — blocks partition K_m           (hole_size = 0)
//   "hole"     — blocks partition K_m \ K_hole  (hole on the top ids)
//   "lemma"    — blocks partition <Z_u u H, D> for the listed D
// Blocks are canonicalized and sorted, so serialization is byte-stable.
struct Certificate {
  std::string kind;
  int m = 0;
  int hole_size = 0;
  std::vector<int> diffs;  // "lemma" kind only
  std::vector<IntSun> blocks;

  HoleGraph target() const;
};

Certificate make_certificate(const Decomposition& d);
Certificate make_lemma_certificate(const LemmaOutput& out);

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);  // throws ParseError

VerificationReport verify_certificate(const Certificate& c);

}  // namespace sunsys
