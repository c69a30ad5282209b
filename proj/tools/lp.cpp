// Command line front end: one subcommand per construction, JSON or text reports.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "letterplace/all.hpp"
#include "letterplace/io.hpp"

using namespace letterplace;
using io::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct Report {
  json body = json::object();
  std::string text;
  int exit = kOk;
};

struct Globals {
  std::string format = "json";
};

json envelope(const std::string& command, const std::string& status) {
  json j;
  j["version"] = io::kFormatVersion;
  j["command"] = command;
  j["status"] = status;
  return j;
}

void emit(const Globals& g, const std::string& command, const Report& r) {
  if (g.format == "text") {
    std::cout << r.text;
    if (!r.text.empty() && r.text.back() != '\n') std::cout << '\n';
    return;
  }
  json j = envelope(command, r.exit == kOk ? "ok" : "verification_failed");
  for (auto& [k, v] : r.body.items()) j[k] = v;
  std::cout << j.dump(2) << '\n';
}

int emit_error(const Globals& g, const std::string& command, const std::string& reason, const std::string& msg,
               int code) {
  if (g.format == "text") {
    std::cerr << "error (" << reason << "): " << msg << '\n';
  } else {
    json j = envelope(command, "error");
    j["reason"] = reason;
    j["message"] = msg;
    std::cout << j.dump(2) << '\n';
  }
  return code;
}

std::string lines(const MonomialIdeal& I, const LabelFn& label = {}) {
  std::string s = I.to_text(label);
  return s.empty() ? "0\n" : s;
}

json pairs_json(const PairSet& S, const Poset& P) {
  json a = json::array();
  for (auto [p, i] : S) a.push_back(json::array({P.label(p), i}));
  return a;
}

MonomialIdeal side_ideal(const HomIdeal& J, const std::string& side) {
  if (side == "letterplace") return letterplace_ideal(J);
  if (side == "coletterplace") return coletterplace_ideal(J);
  throw Error(Errc::InvalidInput, "side must be letterplace or coletterplace");
}

FiberMap choose_map(const HomIdeal& J, const MonomialIdeal& I, const std::string& which) {
  PairSet S = support(J);
  for (auto pr : vars_to_pairs(I.universe()))
    if (!std::binary_search(S.begin(), S.end(), pr)) S.insert(std::lower_bound(S.begin(), S.end(), pr), pr);
  if (which == "p1") return projection_p1(S);
  if (which == "p2") return projection_p2(S);
  if (which == "identity") return identity_map(S);
  return io::fibermap_from_json(io::load_json(which));
}

// --- subcommands ------------------------------------------------------------

Report cmd_hom_enumerate(const std::string& poset, int bound, std::uint64_t cap) {
  Poset P = io::poset_from_json(io::load_json(poset));
  auto maps = enumerate_isotone(P, bound, cap);
  Report r;
  r.body["bound"] = bound;
  r.body["count"] = maps.size();
  r.body["maps"] = json::array();
  for (const auto& m : maps) {
    r.body["maps"].push_back(m.values);
    for (std::size_t k = 0; k < m.values.size(); ++k) r.text += (k ? " " : "") + std::to_string(m.values[k]);
    r.text += "\n";
  }
  return r;
}

Report cmd_markers(const std::string& ideal) {
  HomIdeal J = io::homideal_from_json(io::load_json(ideal));
  const Poset& P = J.poset();
  auto ms = minimal_markers(J);
  Report r;
  r.body["bound_used"] = J.nmax();
  r.body["complement_generators"] = json::array();
  for (const auto& g : J.complement_gens()) r.body["complement_generators"].push_back(g.values);
  r.body["markers"] = json::array();
  for (const auto& m : ms) {
    json e;
    json dom = json::array(), vals = json::object();
    for (int p : mask_members(m.domain)) {
      dom.push_back(P.label(p));
      vals[P.label(p)] = m.values[p];
    }
    e["domain"] = dom;
    e["values"] = vals;
    r.body["markers"].push_back(e);
    r.text += "{";
    bool first = true;
    for (int p : mask_members(m.domain)) {
      r.text += (first ? "" : ", ") + P.label(p) + "->" + std::to_string(m.values[p]);
      first = false;
    }
    r.text += "}\n";
  }
  return r;
}

Report cmd_letterplace(const std::string& ideal, bool co) {
  HomIdeal J = io::homideal_from_json(io::load_json(ideal));
  auto label = poset_labels(J.poset());
  MonomialIdeal I = co ? coletterplace_ideal(J) : letterplace_ideal(J);
  Report r;
  r.body["generators"] = io::to_json(I, label);
  r.body["support"] = pairs_json(support(J), J.poset());
  r.body["bound_used"] = J.nmax();
  r.body["unit_ideal"] = I.is_unit();
  r.body["zero_ideal"] = I.is_zero();
  r.text = lines(I, label);
  return r;
}

Report cmd_dual_check(const std::string& ideal) {
  HomIdeal J = io::homideal_from_json(io::load_json(ideal));
  auto label = poset_labels(J.poset());
  MonomialIdeal L = letterplace_ideal(J), C = coletterplace_ideal(J);
  bool forward = alexander_dual(C).same_generators(L);
  bool backward = alexander_dual(L).same_generators(C);
  Report r;
  r.body["dual_of_coletterplace_is_letterplace"] = forward;
  r.body["dual_of_letterplace_is_coletterplace"] = backward;
  r.body["letterplace"] = io::to_json(L, label);
  r.body["coletterplace"] = io::to_json(C, label);
  r.body["bound_used"] = J.nmax();
  r.exit = forward && backward ? kOk : kVerifyFailed;
  r.text = std::string("alexander duality ") + (r.exit == kOk ? "holds" : "FAILS") + "\n";
  return r;
}

Report cmd_project(const std::string& ideal, const std::string& side, const std::string& map, bool check) {
  HomIdeal J = io::homideal_from_json(io::load_json(ideal));
  MonomialIdeal I = side_ideal(J, side);
  FiberMap f = choose_map(J, I, map);
  FiberKind kind = fiber_kind(J.poset(), f);
  Report r;
  r.body["side"] = side;
  r.body["fiber_kind"] = fiber_kind_name(kind);
  r.body["isotone"] = admits_isotone_order(J.poset(), f);
  MonomialIdeal proj = project_ideal(I, f);
  auto label = poset_labels(J.poset());
  r.body["generators"] = io::to_json(proj, label);
  if (!check) {
    r.text = lines(proj, label);
    return r;
  }
  RegularCheck rc = regular_quotient_check(I, f);
  r.body["source_numerator"] = io::kpoly_json(rc.source_numerator);
  r.body["target_numerator"] = io::kpoly_json(rc.target_numerator);
  r.body["source_variables"] = rc.source_vars;
  r.body["target_variables"] = rc.target_vars;
  bool strict_ok = side == "letterplace"
                       ? (kind == FiberKind::RightStrict || kind == FiberKind::Both)
                       : (kind == FiberKind::LeftStrict || kind == FiberKind::Both);
  r.body["hypothesis_met"] = strict_ok;
  r.body["regular"] = rc.holds;
  r.exit = rc.holds ? kOk : kVerifyFailed;
  r.text = std::string("K_S = ") + kpoly_to_string(rc.source_numerator) + "\nK_R = " +
           kpoly_to_string(rc.target_numerator) + "\n" + (rc.holds ? "regular quotient\n" : "NOT a regular quotient\n");
  return r;
}

Report cmd_pstable(const std::string& poset, const std::string& ideal_file, const std::string& mode,
                   std::optional<std::uint64_t> bound, std::optional<unsigned> power) {
  Poset P = io::poset_from_json(io::load_json(poset));
  Report r;
  if (power) {
    auto res = max_ideal_power_stable(P, *power);
    r.body["power"] = *power;
    r.body["p_stable"] = res.stable;
    r.body["top_rooted_forest"] = res.forest;
    r.body["agree"] = res.stable == res.forest;
    r.exit = res.stable == res.forest ? kOk : kVerifyFailed;
    r.text = std::string("m^") + std::to_string(*power) + (res.stable ? " is" : " is not") + " P-stable; forest test " +
             (res.forest ? "true" : "false") + "\n";
    return r;
  }
  if (ideal_file.empty()) throw Error(Errc::InvalidInput, "pass --ideal-file or --power");
  io::IdealFile f = io::load_ideal_file(ideal_file, &P);
  if (f.family != VarFamily::Elem) {
    // Element variables are the only meaningful family here.
    f = io::parse_ideal_text("# family: elem\n" + io::read_file(ideal_file), &P);
  }
  StableOptions opt;
  opt.mode = mode == "bounded" ? StableMode::Bounded : StableMode::Exact;
  if (mode != "exact" && mode != "bounded") throw Error(Errc::InvalidInput, "mode must be exact or bounded");
  opt.bound = bound;
  bool v = is_p_stable(P, f.ideal, opt);
  r.body["mode"] = mode;
  if (opt.mode == StableMode::Bounded) r.body["bound_used"] = bound ? *bound : f.ideal.max_degree() + 2;
  r.body["p_stable"] = v;
  r.text = std::string(v ? "P-stable" : "not P-stable") + "\n";
  return r;
}

Report cmd_ss_dualize(const std::string& ideal_file, std::optional<int> m_flag, bool bounded,
                      std::optional<int> n_flag) {
  std::string text = io::read_file(ideal_file);
  io::IdealFile f = io::parse_ideal_text(text);
  Report r;
  if (bounded) {
    if (!m_flag || !n_flag) throw Error(Errc::InvalidInput, "--bounded needs --m and --n");
    if (f.family != VarFamily::Nat) throw Error(Errc::InvalidInput, "--bounded expects a nat family ideal");
    MonomialIdeal out = dualize_bounded(f.ideal, *m_flag, *n_flag);
    r.body["family"] = "nat";
    r.body["m"] = *n_flag;
    r.body["n"] = *m_flag;
    r.body["generators"] = io::to_json(out);
    r.text = "# family: nat\n# m: " + std::to_string(*n_flag) + "\n" + lines(out);
    return r;
  }
  if (f.family != VarFamily::Elem) throw Error(Errc::InvalidInput, "dualize expects '# family: elem'");
  int m = m_flag ? *m_flag : (f.m ? *f.m : 0);
  if (m <= 0) throw Error(Errc::InvalidInput, "number of variables m missing (header '# m:' or --m)");
  // Elements are written 1..m in files and stored as 0..m-1.
  std::vector<Monomial> shifted;
  for (const auto& g : f.ideal.gens()) {
    std::vector<Monomial::Entry> e;
    for (const auto& [v, x] : g.terms()) {
      if (v.p < 1 || v.p > m) throw Error(Errc::IdentifierOutOfRange, var_to_string(v) + " is not in x[1]..x[m]");
      e.emplace_back(VarIndex::elem(v.p - 1), x);
    }
    shifted.emplace_back(std::move(e));
  }
  MonomialIdeal out = dualize_ss(MonomialIdeal(std::move(shifted)), m);
  r.body["family"] = "nat";
  r.body["m"] = m;
  r.body["max_degree"] = out.max_degree();
  r.body["generators"] = io::to_json(out);
  r.text = "# family: nat\n# m: " + std::to_string(m) + "\n" + lines(out);
  return r;
}

LSequence parse_l(const std::string& csv, int a) {
  LSequence l;
  l.a = a;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      l.vals.push_back(v);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidInput, "bad sequence entry '" + tok + "'");
    }
  }
  l.validate();
  return l;
}

json instance_json(const DetInstance& d) {
  json j;
  j["l"] = d.l.vals;
  j["variables"] = d.variables;
  j["generating_minors"] = d.minors;
  j["gb_size"] = d.gb_size;
  j["gb_ok"] = d.gb_ok;
  j["diagonal_ok"] = d.diagonal_ok;
  j["initial_ideal"] = io::to_json(d.initial);
  j["initial_equals_LY"] = d.initial_equals_ly;
  j["pairs_reduced"] = d.stats.pairs_reduced;
  j["degree_cap"] = d.stats.degree_cap;
  return j;
}

Report cmd_det_verify(const std::string& lcsv, int a, std::optional<std::uint64_t> cap, std::size_t max_pairs) {
  LSequence l = parse_l(lcsv, a);
  GroebnerOptions opt;
  opt.degree_cap = cap;
  opt.max_pairs = max_pairs;
  DetReport rep = verify_main(l, opt);
  Report r;
  r.body["a"] = a;
  r.body["l"] = l.vals;
  r.body["terrace"] = rep.terrace_seq.vals;
  r.body["i"] = rep.i_seq.vals;
  r.body["LY"] = io::to_json(rep.ly);
  r.body["codim_i"] = rep.codim_i;
  r.body["codim_max_formula"] = rep.codim_max;
  r.body["height_LY"] = rep.height;
  r.body["codim_ok"] = rep.codim_ok;
  r.body["raw"] = instance_json(rep.raw);
  if (rep.reduced) r.body["terrace_instance"] = instance_json(*rep.reduced);
  r.exit = rep.ok() ? kOk : kVerifyFailed;
  std::ostringstream t;
  t << "l = " << to_string(l) << "  terrace = " << to_string(rep.terrace_seq) << "  i = " << to_string(rep.i_seq)
    << "\n";
  t << "GB size " << rep.raw.gb_size << " from " << rep.raw.minors << " minors in " << rep.raw.variables
    << " variables\n";
  t << "in(I) = L^Y(i): " << (rep.raw.initial_equals_ly ? "yes" : "NO") << "\n";
  t << "codim: i_b - i_a = " << rep.codim_i << ", max formula = " << rep.codim_max << ", height = " << rep.height
    << "\n";
  t << (rep.ok() ? "verified\n" : "FAILED\n");
  r.text = t.str();
  return r;
}

Report cmd_hilbert(const std::string& ideal_file, const std::string& ideal_json, const std::string& side,
                   const std::string& poset) {
  MonomialIdeal I;
  if (!ideal_json.empty()) {
    I = side_ideal(io::homideal_from_json(io::load_json(ideal_json)), side);
  } else if (!ideal_file.empty()) {
    std::optional<Poset> P;
    if (!poset.empty()) P = io::poset_from_json(io::load_json(poset));
    I = io::load_ideal_file(ideal_file, P ? &*P : nullptr).ideal;
  } else {
    throw Error(Errc::InvalidInput, "pass --ideal-file or --ideal");
  }
  KPoly k = hilbert_numerator(I);
  Height h = height(I);
  Report r;
  r.body["numerator"] = io::kpoly_json(k);
  r.body["height"] = h.value;
  r.body["zero_ideal"] = h.zero_ideal;
  r.body["unit_ideal"] = h.unit_ideal;
  r.body["variables"] = I.universe().size();
  r.text = kpoly_to_string(k) + "\n";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Letterplace and determinantal ideal toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string command;
  std::function<Report()> run;

  auto* hom = app.add_subcommand("hom", "Hom(P,N) utilities");
  hom->require_subcommand(1);
  hom->fallthrough();
  auto* hom_enum = hom->add_subcommand("enumerate", "List isotone maps P -> [0,N]");
  std::string poset;
  int bound = 1;
  std::uint64_t cap = kDefaultEnumerationCap;
  hom_enum->add_option("--poset", poset, "Poset JSON (file or inline)")->required();
  hom_enum->add_option("--bound", bound, "Largest value N")->check(CLI::NonNegativeNumber);
  hom_enum->add_option("--cap", cap, "Maximum number of maps");
  hom_enum->callback([&] {
    command = "hom enumerate";
    run = [&] { return cmd_hom_enumerate(poset, bound, cap); };
  });

  std::string ideal;
  auto* markers = app.add_subcommand("markers", "Minimal markers of a poset ideal of Hom(P,N)");
  markers->add_option("--ideal", ideal, "HomIdeal JSON")->required();
  markers->callback([&] {
    command = "markers";
    run = [&] { return cmd_markers(ideal); };
  });

  auto* lp = app.add_subcommand("letterplace", "Letterplace ideal L(J,P)");
  lp->add_option("--ideal", ideal, "HomIdeal JSON")->required();
  lp->callback([&] {
    command = "letterplace";
    run = [&] { return cmd_letterplace(ideal, false); };
  });

  auto* colp = app.add_subcommand("coletterplace", "Co-letterplace ideal L(P,J)");
  colp->add_option("--ideal", ideal, "HomIdeal JSON")->required();
  colp->callback([&] {
    command = "coletterplace";
    run = [&] { return cmd_letterplace(ideal, true); };
  });

  auto* dual = app.add_subcommand("dual-check", "Check that L(J,P) and L(P,J) are Alexander dual");
  dual->add_option("--ideal", ideal, "HomIdeal JSON")->required();
  dual->callback([&] {
    command = "dual-check";
    run = [&] { return cmd_dual_check(ideal); };
  });

  std::string side = "letterplace", map = "p1";
  auto* proj = app.add_subcommand("project", "Image of a (co-)letterplace ideal under a fiber map");
  proj->add_option("--ideal", ideal, "HomIdeal JSON")->required();
  proj->add_option("--side", side, "letterplace or coletterplace");
  proj->add_option("--map", map, "p1, p2, identity or a FiberMap JSON");
  proj->callback([&] {
    command = "project";
    run = [&] { return cmd_project(ideal, side, map, false); };
  });

  auto* reg = app.add_subcommand("regular-check", "Hilbert series test of the regular quotient theorems");
  reg->add_option("--ideal", ideal, "HomIdeal JSON")->required();
  reg->add_option("--side", side, "letterplace or coletterplace");
  reg->add_option("--map", map, "p1, p2, identity or a FiberMap JSON");
  reg->callback([&] {
    command = "regular-check";
    run = [&] { return cmd_project(ideal, side, map, true); };
  });

  std::string ideal_file, mode = "exact";
  std::optional<std::uint64_t> dbound;
  std::optional<unsigned> power;
  auto* ps = app.add_subcommand("pstable", "P-stability of a monomial ideal in k[x_P]");
  ps->add_option("--poset", poset, "Poset JSON")->required();
  ps->add_option("--ideal-file", ideal_file, "Monomial ideal file over x[p]");
  ps->add_option("--mode", mode, "exact or bounded");
  ps->add_option("--bound", dbound, "Degree bound D for bounded mode");
  ps->add_option("--power", power, "Test the power m^d of the maximal ideal instead");
  ps->callback([&] {
    command = "pstable";
    run = [&] { return cmd_pstable(poset, ideal_file, mode, dbound, power); };
  });

  std::optional<int> mflag, nflag;
  bool bounded_flag = false;
  auto add_ss_opts = [&](CLI::App* sub) {
    sub->add_option("--ideal-file", ideal_file, "Monomial ideal file")->required();
    sub->add_option("--m", mflag, "Number of variables x_1..x_m (or degree m for --bounded)");
    sub->add_option("--n", nflag, "Largest variable index x_n for --bounded");
    sub->add_flag("--bounded", bounded_flag, "Finite duality on Hom([m],[n]_0)");
  };
  auto* ss = app.add_subcommand("ss", "Strongly stable ideals");
  ss->require_subcommand(1);
  ss->fallthrough();
  auto* ssd = ss->add_subcommand("dualize", "Strongly stable ideal -> m-regular strongly stable ideal");
  add_ss_opts(ssd);
  ssd->callback([&] {
    command = "ss dualize";
    run = [&] { return cmd_ss_dualize(ideal_file, mflag, bounded_flag, nflag); };
  });
  auto* ssd2 = app.add_subcommand("dualize-ss", "Alias of 'ss dualize'");
  add_ss_opts(ssd2);
  ssd2->callback([&] {
    command = "ss dualize";
    run = [&] { return cmd_ss_dualize(ideal_file, mflag, bounded_flag, nflag); };
  });

  std::string lcsv;
  int a_index = 0;
  std::optional<std::uint64_t> degcap;
  std::size_t max_pairs = GroebnerOptions{}.max_pairs;
  auto* det = app.add_subcommand("det", "Determinantal ideals I(l)");
  det->require_subcommand(1);
  det->fallthrough();
  auto* dv = det->add_subcommand("verify", "Groebner verification of in(I(l)) = L^Y(i)");
  dv->add_option("--l", lcsv, "Comma separated sequence l_a,...,l_b")->required();
  dv->add_option("--a", a_index, "Start index a")->check(CLI::NonNegativeNumber);
  dv->add_option("--degree-cap", degcap, "S-pair degree cap (default 3 + max generator degree)");
  dv->add_option("--max-pairs", max_pairs, "S-pair budget");
  dv->callback([&] {
    command = "det verify";
    run = [&] { return cmd_det_verify(lcsv, a_index, degcap, max_pairs); };
  });

  auto* hil = app.add_subcommand("hilbert", "Hilbert series numerator and height of a monomial ideal");
  hil->add_option("--ideal-file", ideal_file, "Monomial ideal file");
  hil->add_option("--ideal", ideal, "HomIdeal JSON (uses --side)");
  hil->add_option("--side", side, "letterplace or coletterplace");
  hil->add_option("--poset", poset, "Poset JSON used to resolve element labels in --ideal-file");
  hil->callback([&] {
    command = "hilbert";
    run = [&] { return cmd_hilbert(ideal_file, ideal, side, poset); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(g, "", "Usage", e.what(), kUsage);
  }

  try {
    Report r = run();
    emit(g, command, r);
    return r.exit;
  } catch (const Error& e) {
    bool budget = e.code() == Errc::BudgetExceeded || e.code() == Errc::ExplosionGuard;
    return emit_error(g, command, std::string(e.reason()), e.what(), budget ? kBudget : kUsage);
  } catch (const std::bad_alloc&) {
    return emit_error(g, command, "BudgetExceeded", "out of memory", kBudget);
  } catch (const std::exception& e) {
    return emit_error(g, command, "InvalidInput", e.what(), kUsage);
  }
}
