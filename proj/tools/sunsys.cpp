#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sunsys/certificate.hpp"
#include "sunsys/oracle.hpp"
#include "sunsys/planner.hpp"

using namespace sunsys;

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 inadmissible/nonexistent
// order, 3 embedding bound violation, 4 anything else.
int exit_code(const Error& e) {
  switch (e.code()) {
    case Errc::NotAdmissible:
    case Errc::NonExistent: return 2;
    case Errc::BoundViolated: return 3;
    case Errc::VerifyFailed: return 1;
    default: return 4;
  }
}

void emit(const Certificate& cert, const std::string& out_path) {
  std::string text = certificate_to_json(cert);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) fail(Errc::ParseError, "cannot open " + out_path + " for writing");
    f << text;
  }
}

Certificate load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return certificate_from_json(ss.str());
}

int require_verified(const Certificate& cert) {
  auto rep = verify_certificate(cert);
  if (!rep.ok) {
    std::cerr << "internal error: emitted decomposition does not verify\n";
    return 1;
  }
  return 0;
}

int cmd_generate(int m, const std::string& out_path) {
  Certificate cert = make_certificate(construct_3ss(m));
  if (int rc = require_verified(cert)) return rc;
  emit(cert, out_path);
  return 0;
}

int cmd_embed(int n, int m, const std::string& base_path, const std::string& out_path) {
  Decomposition base;
  if (!base_path.empty()) {
    Certificate bc = load(base_path);
    if (bc.kind != "complete") fail(Errc::ParseError, "base certificate must have kind 'complete'");
    base = Decomposition{bc.m, 0, bc.blocks};
    if (base.m != n) fail(Errc::ParseError, "base certificate order does not match n");
  } else {
    base = construct_3ss(n);
  }
  Certificate cert = make_certificate(embed(base, m));
  if (int rc = require_verified(cert)) return rc;
  emit(cert, out_path);
  return 0;
}

int cmd_verify(const std::string& path) {
  Certificate cert = load(path);
  auto rep = verify_certificate(cert);
  std::cout << "kind=" << cert.kind << " m=" << cert.m << " hole=" << cert.hole_size
            << " blocks=" << rep.block_count << " edges=" << rep.expected_edge_count << "\n";
  if (rep.ok) {
    std::cout << "ok\n";
    return 0;
  }
  auto dump = [](const char* what, const std::vector<std::pair<int, int>>& es) {
    if (es.empty()) return;
    std::cout << what << " (" << es.size() << "):";
    for (auto [a, b] : es) std::cout << " " << a << "-" << b;
    std::cout << "\n";
  };
  dump("missing", rep.missing_edges);
  dump("duplicated", rep.duplicated_edges);
  dump("foreign", rep.foreign_edges);
  return 1;
}

int cmd_table(int n_max) {
  for (int n = 9; n <= n_max; ++n) {
    if (!is_admissible_order(n).admissible) continue;
    auto res = hole_residues(n);
    std::cout << n << "  " << min_embedding_order(n) << "  {" << res[0] << "," << res[1] << ","
              << res[2] << "," << res[3] << "}\n";
  }
  return 0;
}

int cmd_lemma(const std::string& name, int u, const std::vector<int>& ds, int s, int alpha,
              bool skip_first, const std::string& out_path) {
  auto need = [&](size_t count) {
    if (ds.size() != count)
      fail(Errc::ParseError, name + " takes " + std::to_string(count) + " difference(s)");
  };
  auto arr = [&]<size_t N>() {
    std::array<int, N> a;
    std::copy(ds.begin(), ds.end(), a.begin());
    return a;
  };
  LemmaOutput out = [&] {
    if (name == "two_inf_diff2") return two_inf_diff2(u);
    if (name == "four_inf_diff2_mod12") return four_inf_diff2_mod12(u);
    if (name == "four_inf_diff24") return four_inf_diff24(u);
    if (name == "eight_inf_diff_1_u3") return eight_inf_diff_1_u3(u);
    if (name == "three_inf_1_half") return three_inf_1_half(u);
    if (name == "four_inf_1_half") return four_inf_1_half(u);
    if (name == "six_inf_1_half") return six_inf_1_half(u);
    if (name == "seven_inf_1_half") return seven_inf_1_half(u);
    if (name == "three_inf_12_half") return three_inf_12_half(u);
    if (name == "one_inf_single_diff") { need(1); return one_inf_single_diff(u, ds[0]); }
    if (name == "five_inf_single_diff") { need(1); return five_inf_single_diff(u, ds[0]); }
    if (name == "one_inf_five_diffs") { need(5); return one_inf_five_diffs(u, arr.operator()<5>()); }
    if (name == "two_inf_four_diffs") { need(4); return two_inf_four_diffs(u, arr.operator()<4>()); }
    if (name == "three_inf_three_diffs") { need(3); return three_inf_three_diffs(u, arr.operator()<3>()); }
    if (name == "leave_decomposition") return leave_decomposition(u, s, alpha, skip_first);
    if (name == "leave_alpha8_s1") return leave_alpha8_s1(u);
    fail(Errc::ParseError, "unknown lemma '" + name + "'");
  }();
  Certificate cert = make_lemma_certificate(out);
  if (int rc = require_verified(cert)) return rc;
  emit(cert, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-sun decompositions of complete graphs and complete graphs with holes"};
  app.require_subcommand(1);

  int gen_m = 0, emb_n = 0, emb_m = 0, tab_max = 0, lem_u = 0, lem_s = 0, lem_alpha = 0;
  std::string out_path, base_path, verify_path, lemma_name;
  std::vector<int> lem_diffs;
  bool lem_skip_first = false;

  auto* gen = app.add_subcommand("generate", "construct a 3-sun system of K_m");
  gen->add_option("m", gen_m, "order of the complete graph")->required();
  gen->add_option("-o,--output", out_path, "certificate output path (default stdout)");

  auto* emb = app.add_subcommand("embed", "embed a system of order n into one of order m");
  emb->add_option("n", emb_n, "base order")->required();
  emb->add_option("m", emb_m, "target order")->required();
  emb->add_option("--base", base_path, "base certificate (default: construct one)");
  emb->add_option("-o,--output", out_path, "certificate output path (default stdout)");

  auto* ver = app.add_subcommand("verify", "check a certificate file");
  ver->add_option("file", verify_path, "certificate path")->required();

  auto* tab = app.add_subcommand("table", "embedding bounds for admissible orders");
  tab->add_option("n_max", tab_max, "largest order to list")->required();

  auto* lem = app.add_subcommand("lemma", "run a single block constructor");
  lem->add_option("name", lemma_name, "constructor name")->required();
  lem->add_option("u", lem_u, "cyclic order")->required();
  lem->add_option("-d,--diffs", lem_diffs, "difference parameters");
  lem->add_option("-s", lem_s, "leave periods");
  lem->add_option("--alpha", lem_alpha, "leave alpha (0, 4 or 8)");
  lem->add_flag("--skip-first", lem_skip_first, "omit the first leave orbit");
  lem->add_option("-o,--output", out_path, "certificate output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(gen_m, out_path);
    if (emb->parsed()) return cmd_embed(emb_n, emb_m, base_path, out_path);
    if (ver->parsed()) return cmd_verify(verify_path);
    if (tab->parsed()) return cmd_table(tab_max);
    if (lem->parsed())
      return cmd_lemma(lemma_name, lem_u, lem_diffs, lem_s, lem_alpha, lem_skip_first, out_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 4;
}
