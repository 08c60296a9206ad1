#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "mixedwitt/errors.hpp"
#include "mixedwitt/json_io.hpp"

namespace mixedwitt::cli {

namespace {

using io::json;

struct Options {
  std::string poly, symbol, workspace;
  bool json = false, table = false;
  std::string form, other, slots;
  std::string x, y, z;
  std::string forms, polarization = "pair", ref;
  std::string primes;
  std::size_t budget = kDefaultReferenceBudget;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

std::string signed_label(int eta) { return eta > 0 ? "+1" : "-1"; }

std::string approx(const Ordering& P) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << Rational((P.lo() + P.hi()) / 2).get_d();
  return os.str();
}

class Context {
 public:
  explicit Context(const Options& o) : o_(o) {
    if (!o.workspace.empty()) {
      std::ifstream in(o.workspace);
      if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read workspace file '" + o.workspace + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      ws_ = io::workspace_from_json(io::parse_json(buf.str()));
      if (!o.poly.empty()) throw Error(ErrorKind::InvalidArgument, "--poly conflicts with the workspace field");
      field_ = ws_->field;
    } else if (!o.poly.empty()) {
      field_ = NumberField::make(parse_polynomial(o.poly));
    }
  }

  const NumberField& field() const { return field_; }

  QuaternionAlgebra algebra() const {
    if (!o_.symbol.empty()) {
      QuaternionSymbol s = io::symbol_from_json(field_, json(o_.symbol));
      return QuaternionAlgebra(s.a, s.b);
    }
    if (ws_ && ws_->algebra) return *ws_->algebra;
    throw Error(ErrorKind::InvalidArgument, "no quaternion algebra: pass --symbol a,b or a workspace with an algebra");
  }

  const io::Workspace& workspace() const {
    if (!ws_) throw Error(ErrorKind::InvalidArgument, "this command needs --workspace");
    return *ws_;
  }

  const MixedElement& form(const std::string& name) const {
    if (name.empty()) throw Error(ErrorKind::InvalidArgument, "no form name given");
    return workspace().form(name);
  }

  ReferencePolicy references(const std::string& spec, const QuaternionAlgebra& Q) const {
    if (spec.empty()) return {};
    if (spec == "auto") return ReferencePolicy::global(find_reference(Q, o_.budget).form);
    if (spec == "local") return ReferencePolicy::local_search(Q);
    if (ws_ && ws_->forms.count(spec)) {
      const SkewHermitianDiagonal& s = ws_->forms.at(spec).skew();
      if (s.empty()) throw Error(ErrorKind::InvalidArgument, "reference form '" + spec + "' has no skew part");
      return ReferencePolicy::global(s);
    }
    return ReferencePolicy::single(io::parse_pure_quaternion(Q, spec));
  }

 private:
  const Options& o_;
  std::optional<io::Workspace> ws_;
  NumberField field_ = NumberField::rationals();
};

Quaternion parse_quaternion(const QuaternionAlgebra& Q, const std::string& text) {
  if (text.find_first_of("ijk") != std::string::npos) return io::parse_pure_quaternion(Q, text).quaternion();
  auto parts = split_list(text);
  if (parts.size() != 4) throw ParseError("quaternion needs four comma-separated coordinates or i/j/k terms", 0);
  const NumberField& F = Q.field();
  return Quaternion(Q, {FieldElement::parse(F, parts[0]), FieldElement::parse(F, parts[1]),
                        FieldElement::parse(F, parts[2]), FieldElement::parse(F, parts[3])});
}

std::string skew_to_string(const SkewHermitianDiagonal& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + io::format_pure(s.entries()[i]);
  return out + ">";
}

std::string herm_to_string(const HermitianDiagonal& h) {
  std::string out = "<";
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "," : "") + h.entries()[i].to_string();
  return out + ">";
}

void print_mixed(std::ostream& out, const MixedElement& x) {
  print_table(out, {{"scalar", x.scalar().to_string()},
                    {"herm", herm_to_string(x.herm())},
                    {"skew", skew_to_string(x.skew())}});
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_orderings(const Context& ctx, std::ostream& out, bool as_json) {
  const NumberField& F = ctx.field();
  const auto orderings = F.orderings();
  if (as_json) {
    json list = json::array();
    for (const auto& P : orderings) list.push_back(io::to_json(P));
    emit(out, {{"field", io::to_json(F.minimal_polynomial())},
               {"degree", F.degree()},
               {"count", orderings.size()},
               {"orderings", list}});
    return kOk;
  }
  print_table(out, {{"field", F.minimal_polynomial().to_string()},
                    {"degree", std::to_string(F.degree())},
                    {"orderings", std::to_string(orderings.size())}});
  if (orderings.empty()) return kOk;
  std::vector<std::vector<std::string>> rows{{"index", "lo", "hi", "approx"}};
  for (const auto& P : orderings)
    rows.push_back({std::to_string(P.index()), rational_to_string(P.lo()), rational_to_string(P.hi()), approx(P)});
  print_table(out, rows);
  return kOk;
}

int cmd_partition(const Context& ctx, std::ostream& out, bool as_json) {
  const QuaternionAlgebra Q = ctx.algebra();
  const OrderingPartition part = partition_orderings(Q);
  if (as_json) {
    json j = io::to_json(part);
    j["algebra"] = io::to_json(Q.symbol());
    emit(out, j);
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"ordering", "stratum"}};
  for (const auto& P : Q.field().orderings())
    rows.push_back({std::to_string(P.index()), part.stratum_of(P) == Stratum::Split ? "split" : "nonsplit"});
  print_table(out, rows);
  return kOk;
}

json signature_json(const QuadraticForm& q) {
  json sigs = json::array();
  for (const auto& P : q.field().orderings()) sigs.push_back(signature(q, P));
  const ClassicalInvariants inv = invariants(q);
  return {{"form", io::to_json(q)},
          {"dim_mod2", inv.dim_mod2},
          {"signed_disc", io::to_json(inv.signed_disc)},
          {"signatures", sigs}};
}

void print_signatures(std::ostream& out, const QuadraticForm& q) {
  const ClassicalInvariants inv = invariants(q);
  print_table(out, {{"form", q.to_string()},
                    {"dim_mod2", std::to_string(inv.dim_mod2)},
                    {"signed_disc", inv.signed_disc.to_string()}});
  std::vector<std::vector<std::string>> rows{{"ordering", "signature"}};
  for (const auto& P : q.field().orderings()) rows.push_back({std::to_string(P.index()), std::to_string(signature(q, P))});
  if (rows.size() > 1) print_table(out, rows);
}

int cmd_witt_sig(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  const QuadraticForm q = io::form_from_json(ctx.field(), json(o.form));
  if (as_json)
    emit(out, signature_json(q));
  else
    print_signatures(out, q);
  return kOk;
}

int cmd_witt_equal(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  const QuadraticForm q1 = io::form_from_json(ctx.field(), json(o.form));
  const QuadraticForm q2 = io::form_from_json(ctx.field(), json(o.other));
  json j;
  std::string verdict;
  if (ctx.field().is_rational()) {
    const bool eq = witt_equal_rational(q1, q2);
    verdict = eq ? "equal" : "different";
    j = {{"exact", true}, {"equal", eq}};
  } else {
    const bool weak = weak_equivalence(q1, q2) == WeakVerdict::EquivalentWeakly;
    verdict = weak ? "equivalent-weakly" : "distinguished";
    j = {{"exact", false}, {"verdict", verdict}};
  }
  if (as_json)
    emit(out, j);
  else
    out << verdict << "\n";
  return kOk;
}

int cmd_witt_pfister(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  const QuadraticForm slots = io::form_from_json(ctx.field(), json(o.slots));
  const QuadraticForm q = pfister(ctx.field(), slots.entries());
  if (as_json)
    emit(out, signature_json(q));
  else
    print_signatures(out, q);
  return kOk;
}

int cmd_quat_mul(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  const QuaternionAlgebra Q = ctx.algebra();
  const Quaternion p = parse_quaternion(Q, o.x) * parse_quaternion(Q, o.y);
  if (as_json) {
    json j = io::to_json(p);
    j["trd"] = io::to_json(trd(p));
    j["nrd"] = io::to_json(nrd(p));
    emit(out, j);
    return kOk;
  }
  print_table(out, {{"product", p.to_string()}, {"trd", trd(p).to_string()}, {"nrd", nrd(p).to_string()}});
  return kOk;
}

int cmd_quat_slot(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  const QuaternionAlgebra Q = ctx.algebra();
  const PureQuaternion z = io::parse_pure_quaternion(Q, o.z);
  const PureQuaternion w = anticommuting_unit(z);
  const FieldElement sq = pure_square(z), c = pure_square(w);
  if (as_json) {
    emit(out, {{"z", io::to_json(z.quaternion())},
               {"square", io::to_json(sq)},
               {"anticommuting_unit", io::to_json(w.quaternion())},
               {"slot", io::to_json(c)},
               {"symbol", io::to_json(QuaternionSymbol(sq, c))}});
    return kOk;
  }
  print_table(out, {{"z", io::format_pure(z)},
                    {"z^2", sq.to_string()},
                    {"anticommuting", io::format_pure(w)},
                    {"slot", c.to_string()},
                    {"symbol", "(" + sq.to_string() + "," + c.to_string() + ")"}});
  return kOk;
}

int cmd_mixed_mul(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  const MixedElement p = mixed_mul(ctx.form(o.x), ctx.form(o.y));
  if (as_json)
    emit(out, io::to_json(p));
  else
    print_mixed(out, p);
  return kOk;
}

int cmd_mixed_rdim2(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  const int r = rdim2(ctx.form(o.x));
  if (as_json)
    emit(out, {{"form", o.x}, {"rdim2", r}});
  else
    out << r << "\n";
  return kOk;
}

bool looks_like_labels(const std::string& spec) {
  return !spec.empty() && spec.find_first_not_of("0123456789:+-, ") == std::string::npos && spec.find(':') != std::string::npos;
}

PolarizationMap parse_labels(const std::string& spec) {
  PolarizationMap pol;
  for (const auto& item : split_list(spec)) {
    auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0) throw ParseError("label must be index:+1 or index:-1", 0);
    const std::string idx = item.substr(0, colon), val = item.substr(colon + 1);
    int eta = 0;
    if (val == "+1" || val == "1") eta = 1;
    else if (val == "-1") eta = -1;
    else throw ParseError("label value must be +1 or -1, got '" + val + "'", colon + 1);
    if (idx.size() > 9) throw ParseError("ordering index too large", 0);
    pol.set(std::stoul(idx), eta);
  }
  return pol;
}

int cmd_sign_table(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  const io::Workspace& ws = ctx.workspace();
  const QuaternionAlgebra Q = ctx.algebra();
  const auto orderings = Q.field().orderings();
  std::vector<std::string> names = split_list(o.forms);
  if (names.empty())
    for (const auto& [k, v] : ws.forms) names.push_back(k);

  std::string ref_spec = o.ref;
  std::optional<PolarizationMap> pol;
  const std::string& spec = o.polarization;
  if (spec.rfind("ref:", 0) == 0) {
    if (!ref_spec.empty()) throw Error(ErrorKind::InvalidArgument, "give the reference either in ref: or --ref");
    ref_spec = spec.substr(4);
    PolarizationMap plus;
    for (const auto& P : orderings) plus.set(P.index(), 1);
    pol = plus;
  } else if (spec.rfind("pol:", 0) == 0) {
    const std::string name = spec.substr(4);
    auto it = ws.polarizations.find(name);
    if (it == ws.polarizations.end())
      throw Error(ErrorKind::InvalidArgument, "workspace has no polarization named '" + name + "'");
    pol = it->second;
  } else if (looks_like_labels(spec)) {
    pol = parse_labels(spec);
  } else if (spec != "pair") {
    throw ParseError("polarization must be pair, ref:<name>, pol:<name> or index:+-1 labels", 0);
  }
  const ReferencePolicy refs = ctx.references(ref_spec, Q);
  if (pol && !pol->is_global(Q.field()))
    throw Error(ErrorKind::PartialPolarization, "labels must cover every ordering");

  json rows = json::array();
  std::vector<std::vector<std::string>> table{{"form"}};
  for (const auto& P : orderings) table[0].push_back("P" + std::to_string(P.index()));
  for (const auto& name : names) {
    const MixedElement& x = ctx.form(name);
    std::vector<std::string> cells{name};
    json values = json::array();
    if (pol) {
      for (const auto& [k, v] : total_signature(x, *pol, refs)) {
        values.push_back(v);
        cells.push_back(std::to_string(v));
      }
      rows.push_back({{"form", name}, {"values", values}});
    } else {
      for (const auto& P : orderings) {
        const SignaturePair s = signature_pair(x, P, refs);
        values.push_back(json::array({s.plus, s.minus}));
        cells.push_back("(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")");
      }
      rows.push_back({{"form", name}, {"pairs", values}});
    }
    table.push_back(cells);
  }
  if (as_json) {
    json idx = json::array();
    for (const auto& P : orderings) idx.push_back(P.index());
    json j = {{"orderings", idx}, {"mode", pol ? "polarized" : "pair"}, {"rows", rows}};
    if (pol) j["polarization"] = io::to_json(*pol);
    emit(out, j);
  } else {
    print_table(out, table);
  }
  return kOk;
}

int cmd_reference_find(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  const QuaternionAlgebra Q = ctx.algebra();
  const ReferenceForm r = find_reference(Q, o.budget);
  const OrderingPartition part = partition_orderings(Q);
  if (as_json) {
    json skew = json::array(), text = json::array();
    for (const auto& z : r.form.entries()) {
      skew.push_back(io::to_json(z.quaternion()));
      text.push_back(io::format_pure(z));
    }
    emit(out, {{"skew", skew}, {"text", text}, {"nonzero_set", r.nonzero_set}, {"split", io::to_json(part)["split"]}});
    return kOk;
  }
  std::string nz;
  for (std::size_t i : r.nonzero_set) nz += (nz.empty() ? "" : ",") + std::to_string(i);
  print_table(out, {{"reference", skew_to_string(r.form)}, {"nonzero_on", nz.empty() ? "-" : nz}});
  return kOk;
}

int cmd_polarize_principal(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  const QuaternionAlgebra Q = ctx.algebra();
  const ReferencePolicy refs = ctx.references(o.ref, Q);
  const PolarizationMap pol = principal_polarization(ctx.form(o.x), refs);
  if (as_json) {
    emit(out, io::to_json(pol));
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"ordering", "label"}};
  for (const auto& [k, v] : pol.labels()) rows.push_back({std::to_string(k), signed_label(v)});
  print_table(out, rows);
  return kOk;
}

int cmd_spectrum(const Options& o, const Context& ctx, std::ostream& out, bool as_json) {
  std::vector<Integer> primes;
  for (const auto& p : split_list(o.primes)) {
    Integer n;
    if (n.set_str(p, 10) != 0) throw ParseError("'" + p + "' is not an integer", 0);
    primes.push_back(n);
  }
  const SpectrumReport r = spectrum_report(ctx.algebra(), primes);
  if (as_json) {
    emit(out, io::to_json(r));
    return kOk;
  }
  print_table(out, {{"orderings", std::to_string(r.ordering_count)},
                    {"labels", std::to_string(r.labels.size())},
                    {"xtilde", std::to_string(r.xtilde.size())}});
  for (const auto& l : r.labels) out << l.to_string() << "\n";
  return kOk;
}

void add_field_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--poly", o.poly, "defining polynomial in t (default: t, the rationals)");
  cmd->add_option("--workspace", o.workspace, "workspace JSON file");
  auto* j = cmd->add_flag("--json", o.json, "JSON output");
  auto* t = cmd->add_flag("--table", o.table, "plain table output");
  j->excludes(t);
}

void add_algebra_options(CLI::App* cmd, Options& o) {
  add_field_options(cmd, o);
  cmd->add_option("--symbol", o.symbol, "quaternion algebra slots a,b");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Mixed Witt rings of quaternion algebras: signatures, spectra and polarizations", "mixedwitt"};
  app.require_subcommand(1);

  auto* orderings = app.add_subcommand("orderings", "real orderings of the field");
  add_field_options(orderings, o);

  auto* partition = app.add_subcommand("partition", "split and nonsplit orderings of the algebra");
  add_algebra_options(partition, o);

  auto* witt = app.add_subcommand("witt", "quadratic forms");
  witt->require_subcommand(1);
  auto* witt_sig = witt->add_subcommand("sig", "signatures and classical invariants");
  add_field_options(witt_sig, o);
  witt_sig->add_option("--form", o.form, "entries, e.g. 1,-1,t")->required();
  auto* witt_equal = witt->add_subcommand("equal", "Witt equality (exact over Q, weak otherwise)");
  add_field_options(witt_equal, o);
  witt_equal->add_option("--form", o.form)->required();
  witt_equal->add_option("--other", o.other)->required();
  auto* witt_pfister = witt->add_subcommand("pfister", "Pfister form <<a1,...,an>>");
  add_field_options(witt_pfister, o);
  witt_pfister->add_option("--slots", o.slots)->required();

  auto* quat = app.add_subcommand("quat", "quaternion arithmetic");
  quat->require_subcommand(1);
  auto* quat_mul = quat->add_subcommand("mul", "product x y");
  add_algebra_options(quat_mul, o);
  quat_mul->add_option("--x", o.x, "e0,e1,e2,e3 or i/j/k terms")->required();
  quat_mul->add_option("--y", o.y)->required();
  auto* quat_slot = quat->add_subcommand("slot", "c with [Q] = (z^2, c)");
  add_algebra_options(quat_slot, o);
  quat_slot->add_option("--z", o.z, "pure quaternion, e.g. i+j")->required();

  auto* mixed = app.add_subcommand("mixed", "mixed Witt ring elements from a workspace");
  mixed->require_subcommand(1);
  auto* mixed_mul_cmd = mixed->add_subcommand("mul", "product of two named forms");
  add_algebra_options(mixed_mul_cmd, o);
  mixed_mul_cmd->add_option("--x", o.x)->required();
  mixed_mul_cmd->add_option("--y", o.y)->required();
  auto* mixed_rdim = mixed->add_subcommand("rdim2", "reduced dimension mod 2");
  add_algebra_options(mixed_rdim, o);
  mixed_rdim->add_option("--x", o.x)->required();

  auto* sign_table = app.add_subcommand("sign-table", "signature table of workspace forms");
  add_algebra_options(sign_table, o);
  sign_table->add_option("--forms", o.forms, "comma-separated names (default: all)");
  sign_table->add_option("--polarization", o.polarization, "pair | ref:<name> | pol:<name> | 0:+1,1:-1");
  sign_table->add_option("--ref", o.ref, "reference: auto | local | form name | pure quaternion");
  sign_table->add_option("--budget", o.budget);

  auto* reference = app.add_subcommand("reference", "reference skew-hermitian forms");
  reference->require_subcommand(1);
  auto* reference_find = reference->add_subcommand("find", "search for a reference form");
  add_algebra_options(reference_find, o);
  reference_find->add_option("--budget", o.budget);

  auto* polarize = app.add_subcommand("polarize", "polarizations");
  polarize->require_subcommand(1);
  auto* principal = polarize->add_subcommand("principal", "principal polarization of a named form");
  add_algebra_options(principal, o);
  principal->add_option("--x", o.x)->required();
  principal->add_option("--ref", o.ref, "reference: auto | local | form name | pure quaternion");
  principal->add_option("--budget", o.budget);

  auto* spectrum = app.add_subcommand("spectrum", "prime spectrum report");
  add_algebra_options(spectrum, o);
  spectrum->add_option("--primes", o.primes, "odd primes p1,p2");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  auto fmt = [&](bool default_json) { return o.json || (default_json && !o.table); };
  try {
    Context ctx(o);
    if (orderings->parsed()) return cmd_orderings(ctx, out, fmt(false));
    if (partition->parsed()) return cmd_partition(ctx, out, fmt(false));
    if (witt_sig->parsed()) return cmd_witt_sig(o, ctx, out, fmt(false));
    if (witt_equal->parsed()) return cmd_witt_equal(o, ctx, out, fmt(false));
    if (witt_pfister->parsed()) return cmd_witt_pfister(o, ctx, out, fmt(false));
    if (quat_mul->parsed()) return cmd_quat_mul(o, ctx, out, fmt(false));
    if (quat_slot->parsed()) return cmd_quat_slot(o, ctx, out, fmt(false));
    if (mixed_mul_cmd->parsed()) return cmd_mixed_mul(o, ctx, out, fmt(false));
    if (mixed_rdim->parsed()) return cmd_mixed_rdim2(o, ctx, out, fmt(false));
    if (sign_table->parsed()) return cmd_sign_table(o, ctx, out, fmt(false));
    if (reference_find->parsed()) return cmd_reference_find(o, ctx, out, fmt(false));
    if (principal->parsed()) return cmd_polarize_principal(o, ctx, out, fmt(false));
    if (spectrum->parsed()) return cmd_spectrum(o, ctx, out, fmt(true));
    err << "error: no command\n";
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::ParseError) return kParse;
    if (e.kind() == ErrorKind::SearchBudgetExceeded) return kBudget;
    return kValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kParse;
  }
}

}  // namespace mixedwitt::cli
