// Command-line front end: reads .stm matrices, prints results in the
// logarithmic notation used throughout the library ("-inf", ghost suffix g),
// or a structured JSON document with --json.
//
// Exit codes: 0 success, 1 domain errors, 2 parse errors.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "suptrop/adjoint.hpp"
#include "suptrop/charpoly.hpp"
#include "suptrop/checks.hpp"
#include "suptrop/digraph.hpp"
#include "suptrop/eigen.hpp"
#include "suptrop/errors.hpp"
#include "suptrop/io.hpp"
#include "suptrop/oracle.hpp"

namespace st = suptrop;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  bool as_json = false;
  bool with_oracle = false;
  int max_enum = 8;
  std::uint64_t seed = 2008;
  int cases = 500;
};

json elem_json(const st::Element& e) {
  json j;
  j["value"] = e.is_bottom() ? "-inf" : e.value().str();
  j["layer"] = e.is_ghost() ? "ghost" : "tangible";
  return j;
}

json vec_json(const st::Vec& v) {
  json j = json::array();
  for (const auto& e : v) j.push_back(elem_json(e));
  return j;
}

json matrix_json(const st::Matrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) rows.push_back(vec_json(a.row(i)));
  json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["entries"] = rows;
  return j;
}

json perm_json(const st::Perm& p) {  // 1-based in all external output
  json j = json::array();
  for (int v : p) j.push_back(v + 1);
  return j;
}

json poly_json(const st::Poly& f) {
  json terms = json::array();
  for (int i = f.degree(); i >= 0; --i) {
    if (f.coef(i).is_bottom()) continue;
    json t;
    t["exp"] = i;
    t["coef"] = elem_json(f.coef(i));
    terms.push_back(t);
  }
  json j;
  j["degree"] = f.degree();
  j["terms"] = terms;
  j["text"] = f.str();
  return j;
}

std::string perm_str(const st::Perm& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(p[i] + 1);
  }
  return s + ")";
}

std::string interval_str(const st::Interval& iv) {
  std::string s = "[";
  s += iv.lo ? iv.lo->str() : "-inf";
  s += ", ";
  s += iv.hi ? iv.hi->str() : "+inf";
  return s + "]";
}

void emit(const Options& opt, const json& doc, const std::string& text) {
  if (opt.as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int oracle_verdict(const Options& opt, bool agree, const std::string& what) {
  if (agree) {
    if (!opt.as_json) std::cout << "oracle: agree\n";
    return 0;
  }
  std::cerr << "oracle: MISMATCH on " << what << "\n";
  return 1;
}

int cmd_det(const Options& opt, const std::string& file, bool classify_only) {
  st::Matrix a = st::load_stm(file);
  st::DetResult d = st::tropical_det(a);
  json j;
  j["value"] = elem_json(d.value);
  j["classification"] = d.classification == st::DetClass::nonsingular
                            ? "nonsingular"
                            : d.classification == st::DetClass::singular
                                  ? "singular"
                                  : "strictly_singular";
  if (d.witness) j["witness"] = perm_json(*d.witness);
  std::string text;
  if (classify_only) {
    text = st::to_string(d.classification) + "\n";
  } else {
    text = d.value.str() + " (" + st::to_string(d.classification) + ")\n";
    if (d.witness) text += "attained by " + perm_str(*d.witness) + "\n";
  }
  int rc = 0;
  if (opt.with_oracle) {
    st::Element brute = st::oracle::brute_det(a, opt.max_enum);
    bool agree = brute == d.value;
    j["oracle"] = elem_json(brute);
    j["oracle_agrees"] = agree;
    rc = oracle_verdict(opt, agree, "determinant");
  }
  emit(opt, j, text);
  return rc;
}

int cmd_matrix_result(const Options& opt, const st::Matrix& m) {
  emit(opt, matrix_json(m), st::format_stm(m));
  return 0;
}

int cmd_qid(const Options& opt, const std::string& file) {
  st::QuasiPair q = st::quasi_identities(st::load_stm(file));
  json j;
  j["left"] = matrix_json(q.left);
  j["right"] = matrix_json(q.right);
  std::string text = "left:\n" + st::format_stm(q.left) + "right:\n" +
                     st::format_stm(q.right);
  emit(opt, j, text);
  return 0;
}

int cmd_vnreg(const Options& opt, const std::string& file) {
  st::VnReport r = st::vn_regular(st::load_stm(file));
  json j;
  j["regular"] = r.regular;
  json pos = json::array();
  for (auto& [i, k] : r.mismatches) pos.push_back({i + 1, k + 1});
  j["mismatches"] = pos;
  std::string text;
  if (r.regular) {
    text = "regular\n";
  } else {
    text = "not regular; mismatches:";
    for (auto& [i, k] : r.mismatches)
      text += " (" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")";
    text += "\n";
  }
  emit(opt, j, text);
  return 0;
}

int cmd_charpoly(const Options& opt, const std::string& file, bool essential) {
  st::Matrix a = st::load_stm(file);
  st::Poly f = st::char_poly(a, std::max(opt.max_enum, 12));
  if (essential) f = st::essential_part(f);
  json j = poly_json(f);
  int rc = 0;
  if (opt.with_oracle && !essential) {
    st::Poly brute = st::oracle::brute_charpoly(a, opt.max_enum);
    bool agree = brute == f;
    j["oracle"] = poly_json(brute);
    j["oracle_agrees"] = agree;
    rc = oracle_verdict(opt, agree, "characteristic polynomial");
  }
  emit(opt, j, f.str() + "\n");
  return rc;
}

int cmd_roots(const Options& opt, const std::string& file) {
  st::Matrix a = st::load_stm(file);
  st::Poly f = st::char_poly(a, std::max(opt.max_enum, 12));
  st::RootSet rs = st::tangible_roots(f);
  json j;
  j["corner_roots"] = vec_json(rs.corner_roots);
  json ivs = json::array();
  for (const auto& iv : rs.ghost_intervals) {
    json ji;
    ji["lo"] = iv.lo ? json(iv.lo->str()) : json(nullptr);
    ji["hi"] = iv.hi ? json(iv.hi->str()) : json(nullptr);
    ivs.push_back(ji);
  }
  j["ghost_intervals"] = ivs;
  std::string text = "corner roots:";
  if (rs.corner_roots.empty()) text += " none";
  for (const auto& r : rs.corner_roots) text += " " + r.str();
  text += "\n";
  if (!rs.ghost_intervals.empty()) {
    text += "ghost intervals:";
    for (const auto& iv : rs.ghost_intervals) text += " " + interval_str(iv);
    text += "\n";
  }
  int rc = 0;
  if (opt.with_oracle) {
    // Every reported corner root must appear in the oracle's exact scan.
    st::Rat lo(-100), hi(100), step(1, 3);
    auto scan = st::oracle::scan_roots(f, lo, hi, step);
    bool agree = true;
    for (const auto& r : rs.corner_roots) {
      bool found = false;
      for (const auto& s : scan)
        if (s == r) found = true;
      agree = agree && found;
    }
    j["oracle_agrees"] = agree;
    rc = oracle_verdict(opt, agree, "roots");
  }
  emit(opt, j, text);
  return rc;
}

int cmd_eigen(const Options& opt, const std::string& file) {
  st::Matrix a = st::load_stm(file);
  auto pairs = st::eigen_pairs(a);
  json arr = json::array();
  std::string text;
  for (const auto& p : pairs) {
    json j;
    j["eigenvalue"] = elem_json(p.eigenvalue);
    j["eigenvector"] = vec_json(p.eigenvector);
    j["exact"] = p.exact;
    arr.push_back(j);
    text += p.eigenvalue.str() + " : " + st::vec_str(p.eigenvector) +
            (p.exact ? " exact" : "") + "\n";
  }
  if (pairs.empty()) text = "no supertropical eigenvalues\n";
  json j;
  j["pairs"] = arr;
  emit(opt, j, text);
  return 0;
}

int cmd_dep(const Options& opt, const std::string& file) {
  st::Matrix a = st::load_stm(file);
  std::vector<st::Vec> rows;
  for (int i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  auto w = st::dependence_witness(rows);
  json j;
  std::string text;
  if (!w) {
    j["dependent"] = false;
    text = "independent (nonsingular)\n";
  } else {
    j["dependent"] = true;
    j["gamma"] = vec_json(w->gamma);
    j["combination"] = vec_json(w->combination);
    text = "gamma: " + st::vec_str(w->gamma) + "\n" +
           "combination: " + st::vec_str(w->combination) + "\n";
  }
  emit(opt, j, text);
  return 0;
}

int cmd_diag(const Options& opt, const std::string& file) {
  auto ud = st::diagonalize(st::load_stm(file));
  json j;
  std::string text;
  if (!ud) {
    j["diagonalizable"] = false;
    text = "not tropically diagonalizable (charpoly not separable or U singular)\n";
  } else {
    j["diagonalizable"] = true;
    j["U"] = matrix_json(ud->first);
    j["D"] = matrix_json(ud->second);
    text = "U:\n" + st::format_stm(ud->first) + "D:\n" +
           st::format_stm(ud->second);
  }
  emit(opt, j, text);
  return 0;
}

int cmd_graph(const Options& opt, const std::string& file) {
  st::Matrix a = st::load_stm(file);
  st::Digraph g = st::from_matrix(a);
  st::Digraph r = st::reduced(g);
  bool cover = st::has_cyclic_cover(g);
  auto hall = st::hall_violation(g);
  json j;
  j["vertices"] = g.n;
  auto edges_json = [](const st::Digraph& gg) {
    json arr = json::array();
    for (const auto& e : gg.edges) {
      json je;
      je["src"] = e.src + 1;
      je["dst"] = e.dst + 1;
      je["weight"] = elem_json(e.weight);
      arr.push_back(je);
    }
    return arr;
  };
  j["edges"] = edges_json(g);
  j["reduced_edges"] = edges_json(r);
  j["cyclic_cover"] = cover;
  if (hall) {
    json hv = json::array();
    for (int v : *hall) hv.push_back(v + 1);
    j["hall_violation"] = hv;
  }
  std::string text = "vertices: " + std::to_string(g.n) + "\nedges:\n";
  for (const auto& e : g.edges)
    text += "  " + std::to_string(e.src + 1) + " -> " +
            std::to_string(e.dst + 1) + "  w=" + e.weight.str() + "\n";
  text += "reduced edges:\n";
  for (const auto& e : r.edges)
    text += "  " + std::to_string(e.src + 1) + " -> " +
            std::to_string(e.dst + 1) + "  w=" + e.weight.str() + "\n";
  text += std::string("cyclic cover: ") + (cover ? "yes" : "no") + "\n";
  if (hall) {
    text += "hall violation: rows";
    for (int v : *hall) text += " " + std::to_string(v + 1);
    text += "\n";
  }
  emit(opt, j, text);
  return 0;
}

int cmd_solve(const Options& opt, const std::string& afile,
              const std::string& vfile) {
  st::Matrix a = st::load_stm(afile);
  st::Vec v = st::load_stm_vector(vfile);
  st::Vec w = st::solve_ghost(a, v);
  st::Vec aw = a * w;
  json j;
  j["w"] = vec_json(w);
  j["Aw"] = vec_json(aw);
  std::string text = "w: " + st::vec_str(w) + "\nA*w: " + st::vec_str(aw) + "\n";
  emit(opt, j, text);
  return 0;
}

int cmd_check(const Options& opt, const std::string& name) {
  st::CheckResult r = st::run_check(name, opt.seed, opt.cases);
  json j;
  j["check"] = r.name;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  if (!r.ok()) j["first_failure"] = r.first_failure;
  std::string text = r.name + ": " + std::to_string(r.cases) + " cases, " +
                     std::to_string(r.failures) + " failures\n";
  if (!r.ok()) text += r.first_failure + "\n";
  emit(opt, j, text);
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supertropical matrix algebra"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.as_json, "emit structured JSON");
  app.add_flag("--oracle", opt.with_oracle,
               "also run the brute-force oracle and report agreement");
  app.add_option("--max-enum", opt.max_enum, "oracle/enumeration cap")
      ->default_val(8);
  app.add_option("--seed", opt.seed, "seed for check suites")->default_val(2008);

  std::string file, file2, name;
  int power = 0;

  auto one_file = [&](const std::string& verb, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(verb, desc);
    sub->add_option("file", file, ".stm matrix file")->required();
    return sub;
  };

  CLI::App* det = one_file("det", "tropical determinant (permanent)");
  CLI::App* classify = one_file("classify", "nonsingular / singular / strictly singular");
  CLI::App* adj = one_file("adj", "adjoint matrix");
  CLI::App* qinv = one_file("qinv", "quasi-inverse A^nabla");
  CLI::App* qid = one_file("qid", "quasi-identities A*A^nabla and A^nabla*A");
  CLI::App* vnreg = one_file("vnreg", "von Neumann regularity check");
  CLI::App* charpoly = one_file("charpoly", "characteristic polynomial");
  CLI::App* essential = one_file("essential", "essential part of the characteristic polynomial");
  CLI::App* roots = one_file("roots", "tangible roots of the characteristic polynomial");
  CLI::App* eigen = one_file("eigen", "supertropical eigenvalues and eigenvectors");
  CLI::App* dep = one_file("dep", "tropical dependence witness for the rows");
  CLI::App* diag = one_file("diag", "tropical diagonalization U, D");
  CLI::App* graph = one_file("graph", "weighted digraph dump");

  CLI::App* mul = app.add_subcommand("mul", "matrix product");
  mul->add_option("a", file, "left matrix")->required();
  mul->add_option("b", file2, "right matrix")->required();
  CLI::App* add = app.add_subcommand("add", "matrix sum");
  add->add_option("a", file, "left matrix")->required();
  add->add_option("b", file2, "right matrix")->required();
  CLI::App* pow = app.add_subcommand("pow", "matrix power");
  pow->add_option("a", file, "matrix")->required();
  pow->add_option("m", power, "exponent (>= 0)")->required();
  CLI::App* solve = app.add_subcommand("solve", "solve A*w = v + ghost");
  solve->add_option("a", file, "matrix")->required();
  solve->add_option("v", file2, "vector (1-row or 1-column .stm)")->required();
  CLI::App* check = app.add_subcommand("check", "run a property suite");
  check->add_option("name", name, "hc | detmul | adjid | base | laplace")
      ->required();
  check->add_option("--cases", opt.cases, "cases per suite")->default_val(500);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*det) return cmd_det(opt, file, false);
    if (*classify) return cmd_det(opt, file, true);
    if (*adj) return cmd_matrix_result(opt, st::adjoint(st::load_stm(file)));
    if (*qinv) return cmd_matrix_result(opt, st::quasi_inverse(st::load_stm(file)));
    if (*qid) return cmd_qid(opt, file);
    if (*vnreg) return cmd_vnreg(opt, file);
    if (*charpoly) return cmd_charpoly(opt, file, false);
    if (*essential) return cmd_charpoly(opt, file, true);
    if (*roots) return cmd_roots(opt, file);
    if (*eigen) return cmd_eigen(opt, file);
    if (*dep) return cmd_dep(opt, file);
    if (*diag) return cmd_diag(opt, file);
    if (*graph) return cmd_graph(opt, file);
    if (*mul)
      return cmd_matrix_result(opt, st::load_stm(file) * st::load_stm(file2));
    if (*add)
      return cmd_matrix_result(opt, st::load_stm(file) + st::load_stm(file2));
    if (*pow) return cmd_matrix_result(opt, st::load_stm(file).pow(power));
    if (*solve) return cmd_solve(opt, file, file2);
    if (*check) return cmd_check(opt, name);
  } catch (const st::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const st::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
