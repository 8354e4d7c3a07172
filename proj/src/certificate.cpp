#include "sunsys/certificate.hpp"

#include <algorithm>

#include <json.hpp>

namespace sunsys {

using json = nlohmann::ordered_json;

HoleGraph Certificate::target() const {
  if (kind == "lemma") return HoleGraph(m - hole_size, hole_size, diffs);
  return HoleGraph::complete_with_hole(m - hole_size, hole_size);
}

namespace {

std::vector<IntSun> canonical_blocks(const std::vector<IntSun>& blocks) {
  std::vector<IntSun> out;
  out.reserve(blocks.size());
  for (const IntSun& b : blocks) out.push_back(canonical_sun(b));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Certificate make_certificate(const Decomposition& d) {
  Certificate c;
  c.kind = d.hole_size == 0 ? "complete" : "hole";
  c.m = d.m;
  c.hole_size = d.hole_size;
  c.blocks = canonical_blocks(d.blocks);
  return c;
}

Certificate make_lemma_certificate(const LemmaOutput& out) {
  const int u = out.graph.u();
  Certificate c;
  c.kind = "lemma";
  c.m = u + out.graph.t();
  c.hole_size = out.graph.t();
  c.diffs = out.graph.diffs();
  std::vector<IntSun> blocks;
  for (const Sun& s : out.blocks) blocks.push_back(to_int_sun(s, u));
  c.blocks = canonical_blocks(blocks);
  return c;
}

std::string certificate_to_json(const Certificate& c) {
  json j;
  j["format_version"] = kCertificateFormatVersion;
  j["kind"] = c.kind;
  j["m"] = c.m;
  j["hole_size"] = c.hole_size;
  if (c.kind == "lemma") j["diffs"] = c.diffs;
  j["blocks"] = json::array();
  for (const IntSun& b : c.blocks) j["blocks"].push_back(b);
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  try {
    if (j.at("format_version").get<int>() != kCertificateFormatVersion)
      fail(Errc::ParseError, "unsupported format_version");
    Certificate c;
    c.kind = j.at("kind").get<std::string>();
    if (c.kind != "complete" && c.kind != "hole" && c.kind != "lemma")
      fail(Errc::ParseError, "unknown kind '" + c.kind + "'");
    c.m = j.at("m").get<int>();
    c.hole_size = j.at("hole_size").get<int>();
    if (c.kind == "lemma") c.diffs = j.at("diffs").get<std::vector<int>>();
    for (const auto& jb : j.at("blocks")) {
      if (!jb.is_array() || jb.size() != 6) fail(Errc::ParseError, "block must have 6 vertices");
      IntSun b;
      for (int i = 0; i < 6; ++i) {
        b[i] = jb[i].get<int>();
        if (b[i] < 0 || b[i] >= c.m) fail(Errc::ParseError, "vertex id out of range");
      }
      c.blocks.push_back(b);
    }
    return c;
  } catch (const json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
}

VerificationReport verify_certificate(const Certificate& c) {
  return verify_partition(c.blocks, c.target());
}

}  // namespace sunsys
