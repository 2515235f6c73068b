#include "suptrop/checks.hpp"

#include <functional>

#include "suptrop/adjoint.hpp"
#include "suptrop/charpoly.hpp"
#include "suptrop/eigen.hpp"
#include "suptrop/errors.hpp"
#include "suptrop/io.hpp"

namespace suptrop {

Element random_element(Rng& rng, const GenCfg& cfg) {
  if (rng.chance(cfg.bottom_num, cfg.bottom_den)) return Element::bottom();
  Rat v;
  if (rng.chance(cfg.third_num, cfg.third_den)) {
    v = Rat(rng.uniform(3 * cfg.lo, 3 * cfg.hi), 3);
  } else {
    v = Rat(rng.uniform(cfg.lo, cfg.hi));
  }
  bool ghost = cfg.allow_ghost && rng.chance(cfg.ghost_num, cfg.ghost_den);
  return ghost ? Element::ghost(v) : Element::tangible(v);
}

Matrix random_matrix(Rng& rng, int n, const GenCfg& cfg) {
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = random_element(rng, cfg);
  return a;
}

Vec random_vector(Rng& rng, int n, const GenCfg& cfg) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = random_element(rng, cfg);
  return v;
}

namespace {

using CaseFn = std::function<bool(Rng&, std::string&)>;

CheckResult drive(const std::string& name, std::uint64_t seed, int cases,
                  const CaseFn& fn) {
  Rng rng(seed);
  CheckResult r;
  r.name = name;
  for (int c = 0; c < cases; ++c) {
    ++r.cases;
    std::string note;
    bool ok = fn(rng, note);
    if (!ok) {
      ++r.failures;
      if (r.first_failure.empty())
        r.first_failure = "case " + std::to_string(c) + ": " + note;
    }
  }
  return r;
}

bool check_hc(Rng& rng, std::string& note) {
  GenCfg cfg;
  int n = rng.uniform(1, 5);
  Matrix a = random_matrix(rng, n, cfg);
  if (!satisfies(a, char_poly(a)) || !satisfies(a, tangible_char_poly(a))) {
    note = "matrix\n" + format_stm(a);
    return false;
  }
  return true;
}

bool check_detmul(Rng& rng, std::string& note) {
  GenCfg cfg;
  int n = rng.uniform(1, 5);
  Matrix a = random_matrix(rng, n, cfg);
  Matrix b = random_matrix(rng, n, cfg);
  Element dab = tropical_det(a * b).value;
  Element prod = tropical_det(a).value * tropical_det(b).value;
  if (!surpasses(dab, prod) || nu_lt(dab, prod)) {
    note = "det(AB)=" + dab.str() + " vs det(A)det(B)=" + prod.str();
    return false;
  }
  if (dab.is_tangible() && !(dab == prod)) {
    note = "tangible det(AB)=" + dab.str() + " != " + prod.str();
    return false;
  }
  return true;
}

bool check_adjid(Rng& rng, std::string& note) {
  GenCfg cfg;
  int n = rng.uniform(1, 4);
  Matrix a = random_matrix(rng, n, cfg);
  Element det = tropical_det(a).value;
  Matrix aadj = a * adjoint(a);
  if (!(tropical_det(aadj).value == det.pow(n))) {
    note = "det(A adjA) != det^" + std::to_string(n) + " for\n" + format_stm(a);
    return false;
  }
  if (!(tropical_det(adjoint(a)).value == det.pow(n - 1))) {
    note = "det(adjA) != det^" + std::to_string(n - 1) + " for\n" + format_stm(a);
    return false;
  }
  if (!(aadj * aadj == det * aadj)) {
    note = "(A adjA)^2 != det * A adjA for\n" + format_stm(a);
    return false;
  }
  if (det.is_tangible() &&
      !(tropical_det(quasi_identities(a).left).value == Element::one())) {
    note = "det(I_A) != 0 for\n" + format_stm(a);
    return false;
  }
  return true;
}

bool check_base(Rng& rng, std::string& note) {
  GenCfg cfg;
  cfg.bottom_num = 2;
  cfg.bottom_den = 5;
  int n = rng.uniform(1, 5);
  Matrix a = random_matrix(rng, n, cfg);
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i) rows.push_back(a.row(i));
  auto w = dependence_witness(rows);
  bool nonsing = tropical_det(a).classification == DetClass::nonsingular;
  if (w.has_value() == nonsing) {
    note = "witness presence disagrees with classification for\n" + format_stm(a);
    return false;
  }
  if (w && !verify_witness(rows, *w)) {
    note = "witness failed verification for\n" + format_stm(a);
    return false;
  }
  auto cover = rank_defect_cover(a);
  bool strict = tropical_det(a).classification == DetClass::strictly_singular;
  if (cover.has_value() != strict) {
    note = "rank-defect cover presence wrong for\n" + format_stm(a);
    return false;
  }
  if (cover) {
    auto& [rs, cs] = *cover;
    if (cs.size() + rs.size() < static_cast<size_t>(n) + 1) {
      note = "cover too small for\n" + format_stm(a);
      return false;
    }
    for (int r : rs)
      for (int c : cs)
        if (!a.at(r, c).is_bottom()) {
          note = "cover not bottom for\n" + format_stm(a);
          return false;
        }
  }
  return true;
}

bool check_laplace(Rng& rng, std::string& note) {
  GenCfg cfg;
  int n = rng.uniform(2, 5);
  Matrix a = random_matrix(rng, n, cfg);
  Element det = tropical_det(a).value;
  for (int i = 0; i < n; ++i) {
    Element acc = Element::bottom();
    for (int j = 0; j < n; ++j) {
      Element term = a.at(i, j) * tropical_det(minor_of(a, i, j)).value;
      if (nu_lt(det, term)) {
        note = "minor term exceeds det in row " + std::to_string(i + 1);
        return false;
      }
      acc = acc + term;
    }
    if (!(acc == det)) {
      note = "row " + std::to_string(i + 1) + " expansion " + acc.str() +
             " != det " + det.str();
      return false;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      Element acc = Element::bottom();
      Element acc_lifted = Element::bottom();
      for (int j = 0; j < n; ++j) {
        Element m = tropical_det(minor_of(a, k, j)).value;
        acc = acc + a.at(i, j) * m;
        acc_lifted = acc_lifted + a.at(i, j) * m.lift();
      }
      if (!acc.ghost_or_bottom() || !acc_lifted.ghost_or_bottom()) {
        note = "foreign expansion (" + std::to_string(i + 1) + "," +
               std::to_string(k + 1) + ") not ghost";
        return false;
      }
    }
  return true;
}

}  // namespace

std::vector<std::string> check_names() {
  return {"hc", "detmul", "adjid", "base", "laplace"};
}

CheckResult run_check(const std::string& name, std::uint64_t seed, int cases) {
  if (name == "hc") return drive(name, seed, cases, check_hc);
  if (name == "detmul") return drive(name, seed, cases, check_detmul);
  if (name == "adjid") return drive(name, seed, cases, check_adjid);
  if (name == "base") return drive(name, seed, cases, check_base);
  if (name == "laplace") return drive(name, seed, cases, check_laplace);
  throw DomainError("unknown check '" + name +
                    "'; available: hc detmul adjid base laplace");
}

}  // namespace suptrop
