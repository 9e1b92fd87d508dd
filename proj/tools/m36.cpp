// m36: Chow rings of the small resolutions of the moduli space of six lines
// in the plane.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "m36/classes.hpp"
#include "m36/expression.hpp"
#include "m36/verify.hpp"

using namespace m36;
using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string config_path;
  std::string mode = "exact";
  std::string format = "json";
  std::string out;
  std::string expression;
  std::string point;
  std::string suite = "acceptance";
  bool unresolved = false;
  bool format_given = false;
};

ResolutionConfig load_config(const Options& o) {
  if (o.config_path.empty()) return ResolutionConfig::all_lines();
  std::ifstream in(o.config_path);
  if (!in) throw UsageError("cannot read config file " + o.config_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ResolutionConfig::from_json(buf.str());
}

ojson config_json(const ResolutionConfig& cfg) { return ojson::parse(cfg.to_json()); }

void emit(const Options& o, std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

bool csv(const Options& o) { return o.format == "csv"; }

void require_all_lines(const ResolutionConfig& cfg, const char* what) {
  if (!cfg.s2().empty()) throw UsageError(std::string(what) + " needs the all-lines configuration (empty S2)");
}

RingElement parse_with(const ChowRing& ring, const std::string& text) {
  return parse_expression(text, [&](const RingElement& a, const RingElement& b) { return ring.multiply(a, b); });
}

SingularPointId parse_point(std::string text) {
  if (text.rfind("P[", 0) == 0 && text.back() == ']') text = text.substr(2, text.size() - 3);
  if (text.size() != 8 || text[2] != ',' || text[5] != ',') throw UsageError("point must look like P[12,34,56]");
  return SingularPointId::from_matching(parse_marks(text.substr(0, 2)), parse_marks(text.substr(3, 2)), parse_marks(text.substr(6, 2)));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

int cmd_ranks(const Options& o) {
  const auto cfg = load_config(o);
  const ChowRing ring(cfg, parse_mode(o.mode));
  if (!csv(o)) {
    emit(o, ring.ranks_json());
  } else {
    std::string s = "degree,rank\n";
    const auto r = ring.quotient().ranks();
    for (std::size_t k = 0; k < r.size(); ++k) s += std::to_string(k) + "," + std::to_string(r[k]) + "\n";
    emit(o, s);
  }
  return 0;
}

int cmd_homology(const Options& o) {
  const auto cfg = load_config(o);
  const auto complex = o.unresolved ? unresolved_complex() : build_complex(cfg);
  const auto h = complex.reduced_homology();
  bool expected = true;
  for (const auto& g : h) expected = expected && g.torsion.empty() && g.rank == (g.dim == 3 ? 126u : 0u);
  if (!csv(o)) {
    ojson j;
    j["complex"] = o.unresolved ? "unresolved" : "resolution";
    if (!o.unresolved) j["config"] = config_json(cfg);
    j["mode"] = "exact";
    const auto body = ojson::parse(homology_json(h, complex.face_counts()));
    j["reduced_homology"] = body["degrees"];
    j["faces"] = body["faces"];
    j["matches_theorem"] = expected;
    emit(o, j.dump(2));
  } else {
    std::string s = "dim,rank,torsion\n";
    for (const auto& g : h) {
      std::string t;
      for (const auto& x : g.torsion) t += (t.empty() ? "" : " ") + x.get_str();
      s += std::to_string(g.dim) + "," + std::to_string(g.rank) + "," + t + "\n";
    }
    emit(o, s);
  }
  return expected ? 0 : 1;
}

int cmd_integrate(const Options& o) {
  const auto cfg = load_config(o);
  const ChowRing ring(cfg, parse_mode(o.mode));
  const RingElement e = parse_with(ring, o.expression);
  if (!e.is_homogeneous(4) && !e.empty()) throw UsageError("expression is not homogeneous of degree 4");
  const Rational v = e.empty() ? Rational(0) : ring.integrate(e);
  if (!o.format_given) {
    emit(o, to_string(v));
  } else if (csv(o)) {
    emit(o, "expression,value\n" + csv_field(o.expression) + "," + to_string(v));
  } else {
    ojson j;
    j["expression"] = o.expression;
    j["config"] = config_json(cfg);
    j["mode"] = to_string(ring.mode());
    j["value"] = to_string(v);
    emit(o, j.dump(2));
  }
  return 0;
}

int cmd_psi_table(const Options& o) {
  const auto cfg = load_config(o);
  const ChowRing ring(cfg, parse_mode(o.mode));
  const auto t = psi_table(ring);
  const auto cmp = compare_with_table1(t);
  if (csv(o)) {
    std::string s = "orbit_representative,value\n";
    for (const auto& [rep, v] : t.orbits) s += to_string(rep) + "," + to_string(v) + "\n";
    emit(o, s);
  } else {
    ojson j;
    j["config"] = config_json(cfg);
    j["mode"] = to_string(ring.mode());
    ojson rows = ojson::array();
    for (const auto& [rep, v] : t.orbits)
      rows.push_back({{"orbit_representative", to_string(rep)}, {"orbit_size", t.sizes.at(rep)}, {"value", to_string(v)}});
    j["orbits"] = rows;
    auto side_by_side = [](const std::vector<TableDiscrepancy>& list) {
      ojson a = ojson::array();
      for (const auto& d : list)
        a.push_back({{"orbit_representative", to_string(d.orbit)}, {"printed", d.printed}, {"printed_values", d.printed_values},
                     {"computed", to_string(d.computed)}});
      return a;
    };
    j["table1"] = {{"printed_entries", cmp.printed_entries},
                   {"printed_orbits", cmp.printed_orbits},
                   {"computed_nonzero_orbits", cmp.computed_nonzero_orbits},
                   {"discrepancies", side_by_side(cmp.discrepancies)},
                   {"repeated_orbits", side_by_side(cmp.repeated)},
                   {"zero_criterion", cmp.zero_criterion},
                   {"values_in_range", cmp.values_in_range},
                   {"matches", cmp.ok()}};
    emit(o, j.dump(2));
  }
  if (!cmp.ok()) {
    for (const auto& d : cmp.discrepancies) {
      std::cerr << "table discrepancy: " << to_string(d.orbit) << " computed " << to_string(d.computed) << ", printed";
      if (d.printed.empty()) std::cerr << " nothing";
      for (std::size_t i = 0; i < d.printed.size(); ++i) std::cerr << " " << d.printed[i] << " = " << d.printed_values[i];
      std::cerr << "\n";
    }
    return 1;
  }
  return 0;
}

int cmd_restrict(const Options& o) {
  const auto cfg = load_config(o);
  const ChowRing ring(cfg, parse_mode(o.mode));
  const RingElement e = parse_with(ring, o.expression);
  std::vector<SingularPointId> points;
  if (o.point.empty())
    points = enumerate_points();
  else
    points.push_back(parse_point(o.point));
  std::string s = "point,fiber,value\n";
  ojson values;
  for (auto p : points) {
    const auto v = ring.restrict_to_fiber(e, p);
    const char* kind = v.kind == Fiber::Line ? "line" : "plane";
    values[p.to_string()] = {{"fiber", kind}, {"value", v.to_string()}};
    s += csv_field(p.to_string()) + "," + kind + "," + v.to_string() + "\n";
  }
  if (csv(o)) {
    emit(o, s);
  } else {
    ojson j;
    j["expression"] = o.expression;
    j["config"] = config_json(cfg);
    j["mode"] = to_string(ring.mode());
    j["restrictions"] = values;
    emit(o, j.dump(2));
  }
  return 0;
}

int cmd_picard(const Options& o) {
  const auto cfg = load_config(o);
  require_all_lines(cfg, "picard");
  const ChowRing ring(cfg, parse_mode(o.mode));
  const auto c = picard_m36_basis(ring);
  if (csv(o)) {
    std::string s = "name,expansion,in_subring\n";
    for (std::size_t i = 0; i < c.basis.size(); ++i)
      s += c.basis[i].name + "," + csv_field(c.basis[i].expansion.to_string(divisor_name)) + "," + (c.in_subring[i] ? "true" : "false") + "\n";
    emit(o, s);
  } else {
    ojson j;
    j["mode"] = to_string(ring.mode());
    ojson basis = ojson::array();
    for (std::size_t i = 0; i < c.basis.size(); ++i)
      basis.push_back({{"name", c.basis[i].name}, {"expansion", c.basis[i].expansion.to_string(divisor_name)}, {"in_subring", bool(c.in_subring[i])}});
    j["basis"] = basis;
    j["rank"] = c.rank;
    j["line_restriction_kernel_dim"] = c.kernel_dim;
    j["ok"] = c.ok();
    emit(o, j.dump(2));
  }
  return c.ok() ? 0 : 1;
}

int cmd_canonical(const Options& o) {
  const auto cfg = load_config(o);
  require_all_lines(cfg, "canonical");
  const ChowRing ring(cfg, parse_mode(o.mode));
  const auto rep = canonical_classes(ring);
  if (csv(o)) {
    std::string s = "divisor,K,B,KplusB\n";
    for (auto d : enumerate_divisors()) {
      const Monomial m({d.index()});
      s += d.to_string() + "," + to_string(rep.K.coefficient(m)) + "," + to_string(rep.B.coefficient(m)) + "," +
           to_string(rep.KplusB.coefficient(m)) + "\n";
    }
    emit(o, s);
  } else {
    ojson j;
    j["mode"] = to_string(ring.mode());
    const auto body = ojson::parse(rep.to_json());
    for (const auto& [k, v] : body.items()) j[k] = v;
    emit(o, j.dump(2));
  }
  return rep.ok() ? 0 : 1;
}

int cmd_verify(const Options& o) {
  const auto rep = run_verify(o.suite, parse_mode(o.mode));
  if (csv(o)) {
    std::string s = "id,name,pass,detail\n";
    for (const auto& r : rep.results)
      s += std::to_string(r.id) + "," + r.name + "," + (r.pass ? "true" : "false") + "," + csv_field(r.detail) + "\n";
    emit(o, s);
  } else {
    emit(o, rep.to_json());
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow rings of the small resolutions of M(3,6)", "m36"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "Resolution config JSON, {\"S2\": [[\"12\",\"34\",\"56\"], ...]}; default all lines");
  app.add_option("--mode", o.mode, "exact or two-prime")->check(CLI::IsMember({"exact", "two-prime"}));
  auto* fmt = app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out, "Write the report to this file");

  std::function<int(const Options&)> run;
  auto sub = [&](const char* name, const char* help, int (*f)(const Options&)) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&run, f] { run = f; });
    return s;
  };
  sub("ranks", "Ranks and torsion of the Chow groups", cmd_ranks);
  sub("homology", "Reduced homology of the boundary complex", cmd_homology)
      ->add_flag("--unresolved", o.unresolved, "Use the complex of the unresolved space");
  sub("integrate", "Degree of a degree-4 class expression", cmd_integrate)->add_option("expression", o.expression)->required();
  sub("psi-table", "Top intersections of psi classes by S6 orbit, compared with the embedded table", cmd_psi_table);
  auto* restr = sub("restrict", "Restriction of a class to the exceptional fibers", cmd_restrict);
  restr->add_option("expression", o.expression)->required();
  restr->add_option("--point", o.point, "P[12,34,56]; default all fifteen points");
  sub("picard", "Picard basis of M(3,6) with its certificate", cmd_picard);
  sub("canonical", "Canonical and log canonical classes", cmd_canonical);
  sub("verify", "Acceptance suite", cmd_verify)
      ->add_option("--suite", o.suite, "acceptance or one of the single checks")
      ->check(CLI::IsMember([] {
        auto names = suite_names();
        names.insert(names.begin(), "acceptance");
        return names;
      }()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.format_given = fmt->count() > 0;
  try {
    return run(o);
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
