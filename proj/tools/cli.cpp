#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "malcev/error.hpp"
#include "malcev/io.hpp"
#include "malcev/oracle.hpp"

namespace malcev {

namespace {

using ojson = nlohmann::ordered_json;

struct Flags {
  bool json = false;
  bool strict = false;
  std::uint64_t seed = 0;
};

/// Collects reports and values; emitted once at the end.
class Output {
 public:
  Output(std::string command, const Flags& flags) : command_(std::move(command)), flags_(flags) {}

  void report(const VerificationReport& r) {
    passed_ = passed_ && r.passed();
    text_ += r.to_text();
    reports_.push_back(report_json(r));
  }
  void value(const std::string& key, ojson v, const std::string& line) {
    values_[key] = std::move(v);
    if (!line.empty()) text_ += line + "\n";
  }
  void line(const std::string& text) { text_ += text + "\n"; }
  void fail() { passed_ = false; }
  bool passed() const { return passed_; }

  std::string render() const {
    if (!flags_.json) return text_;
    ojson out = ojson::object();
    out["command"] = command_;
    out["passed"] = passed_;
    out["reports"] = reports_;
    out["values"] = values_;
    return out.dump(2) + "\n";
  }

 private:
  std::string command_;
  const Flags& flags_;
  bool passed_ = true;
  std::string text_;
  ojson reports_ = ojson::array();
  ojson values_ = ojson::object();
};

template <class T>
T load_as(const std::string& path) {
  return load_document(path).as<T>();
}

/// Writes a document to path, or into the output when no path is given.
void deliver(Output& out, const Document& doc, const std::string& path) {
  const std::string text = emit_document(doc);
  if (path.empty()) {
    out.value("document", document_json(doc), text.substr(0, text.size() - 1));
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + path);
  file << text;
  out.value("written", path, "wrote " + path);
}

struct Coefficients {
  EtRepresentation er;
  CohomologyOptions options;
};

/// "adjoint" or an et_representation file over the given base.
Coefficients load_coefficients(const EmbeddingTensor& et, const std::string& spec,
                               const Flags& flags) {
  CohomologyOptions options;
  options.strict_printed = flags.strict;
  if (spec == "adjoint") {
    options.verify_coefficients = false;
    return {adjoint_coefficients(et), options};
  }
  EtRepresentation er = load_as<EtRepresentation>(spec);
  if (!(er.base() == et))
    throw Error(ErrorCode::ShapeError, "the coefficients are defined over a different base");
  return {std::move(er), options};
}

TwoCochain load_cochain(const std::string& path, const EtRepresentation& er) {
  TwoCochain z = load_as<TwoCochain>(path);
  if (!(z.shape() == er.shape()))
    throw Error(ErrorCode::ShapeError, "the cochain does not match the coefficient dimensions");
  if (z.field() != er.field()) throw Error(ErrorCode::FieldMismatch, "cochain over another field");
  return z;
}

ojson coordinates_json(const Vector& v) {
  ojson out = ojson::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

VerificationReport informational(std::string name, bool passed, const std::string& subject) {
  VerificationReport r(subject);
  CheckResult c(std::move(name), false);
  c.evaluated = 1;
  c.passed = passed;
  r.add(std::move(c));
  return r;
}

VerificationReport mark_informational(VerificationReport r) {
  VerificationReport out(r.subject());
  for (auto c : r.checks()) {
    c.required = false;
    out.add(std::move(c));
  }
  return out;
}

int cmd_verify(Output& out, const std::string& path, const std::string& side) {
  const Document doc = load_document(path);
  switch (doc.kind) {
    case DocumentKind::MalcevAlgebra: {
      const auto& a = doc.as<AlgebraData>();
      out.report(check_malcev(a));
      out.report(check_sagle(a));
      out.report(mark_informational(check_jacobi(a)));
      break;
    }
    case DocumentKind::Dialgebra: {
      const auto& a = doc.as<AlgebraData>();
      VerificationReport left = check_left_dialgebra(a), right = check_right_dialgebra(a);
      out.report(side == "right" ? mark_informational(left) : left);
      out.report(side == "right" ? right : mark_informational(right));
      break;
    }
    case DocumentKind::Representation:
      out.report(check_representation(doc.as<Representation>()));
      break;
    case DocumentKind::EmbeddingTensor: {
      const auto& et = doc.as<EmbeddingTensor>();
      out.report(check_embedding_tensor(et));
      out.report(informational("graph_subalgebra", graph_subalgebra_check(et), "graph"));
      break;
    }
    case DocumentKind::EtRepresentation:
      out.report(check_et_representation(doc.as<EtRepresentation>()));
      break;
    default:
      throw Error(ErrorCode::ParseError,
                  "verify does not apply to " + std::string(kind_name(doc.kind)) + " documents");
  }
  return out.passed() ? 0 : 1;
}

int cmd_check_et(Output& out, const std::string& path) {
  const auto et = load_as<EmbeddingTensor>(path);
  out.report(check_embedding_tensor(et));
  out.report(informational("graph_subalgebra", graph_subalgebra_check(et), "graph"));
  return out.passed() ? 0 : 1;
}

int cmd_check_etrep(Output& out, const std::string& path) {
  out.report(check_et_representation(load_as<EtRepresentation>(path)));
  return out.passed() ? 0 : 1;
}

int cmd_hemi(Output& out, const std::string& path, const std::string& target) {
  deliver(out, make_document(hemi_semidirect(load_as<Representation>(path))), target);
  return 0;
}

int cmd_induce(Output& out, const std::string& path, const std::string& side,
               const std::string& target) {
  const Side s = side == "right" ? Side::Right : Side::Left;
  deliver(out, make_document(induce_dialgebra(load_as<EmbeddingTensor>(path), s)), target);
  return 0;
}

int cmd_semidirect(Output& out, const std::string& path, const std::string& target) {
  const Document doc = load_document(path);
  if (doc.kind == DocumentKind::Representation)
    deliver(out, make_document(semidirect_malcev(doc.as<Representation>())), target);
  else
    deliver(out, make_document(semidirect_et(doc.as<EtRepresentation>())), target);
  return 0;
}

int cmd_cocycle(Output& out, const Flags& flags, const std::string& et_path,
                const std::string& coeff, const std::string& cochain) {
  const auto et = load_as<EmbeddingTensor>(et_path);
  const Coefficients c = load_coefficients(et, coeff, flags);
  out.report(is_cocycle(c.er, load_cochain(cochain, c.er), c.options));
  return out.passed() ? 0 : 1;
}

int cmd_coboundary(Output& out, const Flags& flags, const std::string& et_path,
                   const std::string& coeff, const std::string& b_path, const std::string& target) {
  const auto et = load_as<EmbeddingTensor>(et_path);
  const Coefficients c = load_coefficients(et, coeff, flags);
  const auto b = load_as<OneCochainDocument>(b_path);
  if (!(b.shape == c.er.shape()))
    throw Error(ErrorCode::ShapeError, "the one-cochain does not match the coefficient dimensions");
  const TwoCochain z = coboundary(c.er, b.cochain, c.options);
  if (flags.strict)
    for (const auto& n : strict_variant_notes(c.er.shape())) out.line("note: " + n);
  deliver(out, make_document(z), target);
  return 0;
}

void h2_values(Output& out, const H2Result& h) {
  out.value("cochain_dim", h.cochain_dim, "dim C2 = " + std::to_string(h.cochain_dim));
  out.value("cocycle_dim", h.cocycle_dim, "dim Z2 = " + std::to_string(h.cocycle_dim));
  out.value("coboundary_rank", h.coboundary_rank,
            "dim B2 = " + std::to_string(h.coboundary_rank));
  out.value("dimension", h.dimension, "dim H2 = " + std::to_string(h.dimension));
  out.value("coboundaries_are_cocycles", h.coboundaries_are_cocycles,
            std::string("coboundaries in Z2: ") + (h.coboundaries_are_cocycles ? "yes" : "no"));
  ojson reps = ojson::array();
  for (std::size_t i = 0; i < h.representatives.size(); ++i) {
    const Vector c = h.representatives[i].coordinates();
    reps.push_back(coordinates_json(c));
    out.line("representative " + std::to_string(i) + ": " + to_string(c));
  }
  out.value("representatives", std::move(reps), "");
  out.value("notes", h.notes, "");
  for (const auto& n : h.notes) out.line("note: " + n);
}

int cmd_h2(Output& out, const Flags& flags, const std::string& et_path, const std::string& coeff) {
  const auto et = load_as<EmbeddingTensor>(et_path);
  const Coefficients c = load_coefficients(et, coeff, flags);
  h2_values(out, h2(c.er, c.options));
  return 0;
}

int cmd_extend(Output& out, const Flags& flags, const std::string& et_path,
               const std::string& coeff, const std::string& cochain, const std::string& target) {
  const auto et = load_as<EmbeddingTensor>(et_path);
  const Coefficients c = load_coefficients(et, coeff, flags);
  const Extension ext = extension_from_cocycle(c.er, load_cochain(cochain, c.er), c.options);
  out.report(validate_extension(et, ext));
  deliver(out, make_document(et, ext), target);
  return out.passed() ? 0 : 1;
}

int cmd_equiv(Output& out, const Flags& flags, const std::string& et_path,
              const std::string& coeff, const std::string& z1, const std::string& z2) {
  const auto et = load_as<EmbeddingTensor>(et_path);
  const Coefficients c = load_coefficients(et, coeff, flags);
  const auto b = extensions_equivalent(c.er, load_cochain(z1, c.er), load_cochain(z2, c.er),
                                       c.options);
  out.value("equivalent", b.has_value(), std::string("equivalent: ") + (b ? "yes" : "no"));
  if (b) {
    const Vector coords = b->coordinates();
    out.value("witness", coordinates_json(coords), "witness b = " + to_string(coords));
    return 0;
  }
  out.fail();
  return 1;
}

int cmd_deform(Output& out, const std::string& et_path, const std::string& path,
               std::optional<std::size_t> order) {
  const auto et = load_as<EmbeddingTensor>(et_path);
  const Document doc = load_document(path);
  if (doc.kind == DocumentKind::TwoCochain && !order) {
    const DeformationReport r = check_first_order(et, doc.as<TwoCochain>());
    out.report(r.order1);
    out.report(r.order2);
    out.report(r.order3);
    return out.passed() ? 0 : 1;
  }
  FormalDeformation f;
  if (doc.kind == DocumentKind::TwoCochain)
    f.terms.push_back(doc.as<TwoCochain>());
  else
    f = doc.as<FormalDocument>().deformation;
  if (order) {
    if (*order > f.order())
      throw Error(ErrorCode::ShapeError, "--order exceeds the number of terms given");
    f.terms.erase(f.terms.begin() + static_cast<std::ptrdiff_t>(*order), f.terms.end());
  }
  const FormalReport report = check_formal(et, f);
  for (const auto& r : report.degrees) out.report(r);
  return out.passed() ? 0 : 1;
}

int cmd_nijenhuis(Output& out, const std::string& et_path, const std::string& pair_path,
                  const std::string& target) {
  const auto et = load_as<EmbeddingTensor>(et_path);
  const NijenhuisPair N = load_as<NijenhuisDocument>(pair_path).pair;
  const VerificationReport r = is_nijenhuis(et, N);
  out.report(r);
  if (!r.passed()) return 1;
  const DeformationTriple d = nijenhuis_to_deformation(et, N);
  const DeformationReport first = check_first_order(et, d);
  out.report(first.order1);
  out.report(first.order2);
  out.report(first.order3);
  out.report(check_trivial_morphism(et, d, N));
  if (!target.empty()) deliver(out, make_document(d), target);
  return out.passed() ? 0 : 1;
}

int cmd_rigid(Output& out, const std::string& et_path) {
  const auto et = load_as<EmbeddingTensor>(et_path);
  if (!check_embedding_tensor(et).passed())
    throw Error(ErrorCode::NotAnEmbeddingTensor, "the input fails the embedding tensor identity");
  const RigidityReport r = rigidity_report(et);
  h2_values(out, r.cohomology);
  out.value("rigid", r.rigid,
            r.rigid ? "rigid (sufficient condition met)" : "rigidity not concluded");
  return 0;
}

std::string compact(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? ";" : "") + to_string(m.row(r));
  return s + "]";
}

int cmd_enumerate(Output& out, const std::string& path, const std::string& what) {
  const Document doc = load_document(path);
  if (what == "et") {
    const Representation r = doc.kind == DocumentKind::EmbeddingTensor
                                  ? doc.as<EmbeddingTensor>().rep()
                                  : doc.as<Representation>();
    const EtCensus c = enumerate_ets(r);
    out.value("candidates", c.candidates, "candidates: " + std::to_string(c.candidates));
    out.value("count", c.count(), "embedding tensors: " + std::to_string(c.count()));
    ojson list = ojson::array();
    for (const auto& T : c.tensors) {
      list.push_back(matrix_json(T));
      out.line("T = " + compact(T));
    }
    out.value("tensors", std::move(list), "");
    return 0;
  }
  const NijenhuisCensus c = enumerate_nijenhuis(doc.as<EmbeddingTensor>());
  out.value("candidates", c.candidates, "candidates: " + std::to_string(c.candidates));
  out.value("count", c.count(), "nijenhuis pairs: " + std::to_string(c.count()));
  ojson list = ojson::array();
  for (const auto& N : c.pairs) {
    ojson item = ojson::object();
    item["N0"] = matrix_json(N.N0);
    item["N1"] = matrix_json(N.N1);
    list.push_back(std::move(item));
    out.line("N0 = " + compact(N.N0) + " N1 = " + compact(N.N1));
  }
  out.value("pairs", std::move(list), "");
  return 0;
}

std::vector<std::size_t> parse_shape(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
      throw Error(ErrorCode::ParseError, "--shape expects comma-separated counts");
    out.push_back(std::stoul(part));
  }
  return out;
}

Field parse_field_flag(const std::string& text) {
  if (text == "Q") return Field::rational();
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit))
    throw Error(ErrorCode::ParseError, "--field expects Q or a prime");
  return Field::prime(std::stoul(text));
}

int cmd_random(Output& out, const Flags& flags, const std::string& kind, const std::string& shape,
               const std::string& field, std::size_t count) {
  const Field f = parse_field_flag(field);
  const std::vector<std::size_t> s = parse_shape(shape);
  auto need = [&](std::size_t k) {
    if (s.size() != k)
      throw Error(ErrorCode::ParseError,
                  "--shape for " + kind + " takes " + std::to_string(k) + " counts");
  };
  RandomSource rng(flags.seed);
  ojson items = ojson::array();
  for (std::size_t i = 0; i < count; ++i) {
    if (kind == "matrix") {
      need(2);
      items.push_back(matrix_json(rng.matrix(f, s[0], s[1])));
    } else if (kind == "malcev_algebra") {
      need(1);
      items.push_back(document_json(make_document(rng.skew_algebra(f, s[0]))));
    } else if (kind == "two_cochain") {
      need(4);
      items.push_back(document_json(make_document(rng.two_cochain(f, {s[0], s[1], s[2], s[3]}))));
    } else if (kind == "one_cochain") {
      need(4);
      const CochainShape cs{s[0], s[1], s[2], s[3]};
      items.push_back(document_json(make_document(rng.one_cochain(f, cs), f, cs)));
    } else if (kind == "nijenhuis_pair") {
      need(2);
      items.push_back(document_json(make_document(rng.pair(f, s[0], s[1]), f)));
    } else {
      throw Error(ErrorCode::ParseError, "unknown --kind " + kind);
    }
  }
  ojson doc = ojson::object();
  doc["algorithm"] = RandomSource::algorithm;
  doc["seed"] = flags.seed;
  doc["items"] = std::move(items);
  out.value("random", doc, doc.dump(2));
  return 0;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ShapeError:
    case ErrorCode::FieldMismatch:
    case ErrorCode::NonSkewInput:
    case ErrorCode::UnsupportedField:
    case ErrorCode::TooLarge:
      return 2;
    case ErrorCode::InternalInconsistency:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Malcev algebras, embedding tensors, cohomology and deformations", "malcev"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "Machine-readable report");
  app.add_flag("--strict-printed", flags.strict, "Use the alternative cocycle and coboundary forms");
  app.add_option("--seed", flags.seed, "Seed for random generation");

  std::string a1, a2, a3, a4, target, side = "left", coeff = "adjoint", what = "et";
  std::string kind = "two_cochain", shape, field = "3";
  std::size_t count = 1;
  std::optional<std::size_t> order;
  std::function<int(Output&)> action;

  auto positional = [](CLI::App* sub, const char* name, std::string& into) {
    sub->add_option(name, into)->required();
  };
  auto output_option = [&](CLI::App* sub) { sub->add_option("-o,--output", target); };
  auto global_flags = [&](CLI::App* sub) {
    sub->add_flag("--json", flags.json);
    sub->add_flag("--strict-printed", flags.strict);
    sub->add_option("--seed", flags.seed);
  };

  auto* verify = app.add_subcommand("verify", "Check the axioms of any structure document");
  positional(verify, "file", a1);
  verify->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  verify->callback([&] { action = [&](Output& o) { return cmd_verify(o, a1, side); }; });

  auto* check_et = app.add_subcommand("check-et", "Check an embedding tensor");
  positional(check_et, "file", a1);
  check_et->callback([&] { action = [&](Output& o) { return cmd_check_et(o, a1); }; });

  auto* check_etrep = app.add_subcommand("check-etrep", "Check coefficients over an embedding tensor");
  positional(check_etrep, "file", a1);
  check_etrep->callback([&] { action = [&](Output& o) { return cmd_check_etrep(o, a1); }; });

  auto* hemi = app.add_subcommand("hemi", "Hemi-semidirect product dialgebra");
  positional(hemi, "rep", a1);
  output_option(hemi);
  hemi->callback([&] { action = [&](Output& o) { return cmd_hemi(o, a1, target); }; });

  auto* induce = app.add_subcommand("induce", "Dialgebra induced on the module");
  positional(induce, "et", a1);
  induce->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  output_option(induce);
  induce->callback([&] { action = [&](Output& o) { return cmd_induce(o, a1, side, target); }; });

  auto* semidirect = app.add_subcommand("semidirect", "Semidirect product");
  positional(semidirect, "input", a1);
  output_option(semidirect);
  semidirect->callback([&] { action = [&](Output& o) { return cmd_semidirect(o, a1, target); }; });

  auto* cocycle = app.add_subcommand("cocycle", "Check the cocycle conditions");
  positional(cocycle, "et", a1);
  positional(cocycle, "coefficients", a2);
  positional(cocycle, "cochain", a3);
  cocycle->callback([&] { action = [&](Output& o) { return cmd_cocycle(o, flags, a1, a2, a3); }; });

  auto* cob = app.add_subcommand("coboundary", "Apply the coboundary map to a one-cochain");
  positional(cob, "et", a1);
  positional(cob, "coefficients", a2);
  positional(cob, "one_cochain", a3);
  output_option(cob);
  cob->callback(
      [&] { action = [&](Output& o) { return cmd_coboundary(o, flags, a1, a2, a3, target); }; });

  auto* h2cmd = app.add_subcommand("h2", "Second cohomology");
  positional(h2cmd, "et", a1);
  h2cmd->add_option("--coeff", coeff, "adjoint or an et_representation file");
  h2cmd->callback([&] { action = [&](Output& o) { return cmd_h2(o, flags, a1, coeff); }; });

  auto* extend = app.add_subcommand("extend", "Abelian extension defined by a cocycle");
  positional(extend, "et", a1);
  positional(extend, "coefficients", a2);
  positional(extend, "cochain", a3);
  output_option(extend);
  extend->callback(
      [&] { action = [&](Output& o) { return cmd_extend(o, flags, a1, a2, a3, target); }; });

  auto* equiv = app.add_subcommand("equiv", "Whether two cocycles define equivalent extensions");
  positional(equiv, "et", a1);
  positional(equiv, "coefficients", a2);
  positional(equiv, "z1", a3);
  positional(equiv, "z2", a4);
  equiv->callback([&] { action = [&](Output& o) { return cmd_equiv(o, flags, a1, a2, a3, a4); }; });

  auto* deform = app.add_subcommand("deform", "Check a deformation triple or formal deformation");
  positional(deform, "et", a1);
  positional(deform, "deformation", a2);
  deform->add_option("--order", order);
  deform->callback([&] { action = [&](Output& o) { return cmd_deform(o, a1, a2, order); }; });

  auto* nij = app.add_subcommand("nijenhuis", "Check a Nijenhuis pair and its deformation");
  positional(nij, "et", a1);
  positional(nij, "pair", a2);
  nij->add_option("--emit-deformation", target);
  nij->callback([&] { action = [&](Output& o) { return cmd_nijenhuis(o, a1, a2, target); }; });

  auto* rigid = app.add_subcommand("rigid", "Rigidity via adjoint second cohomology");
  positional(rigid, "et", a1);
  rigid->callback([&] { action = [&](Output& o) { return cmd_rigid(o, a1); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive census over a small prime field");
  positional(enumerate, "input", a1);
  enumerate->add_option("--what", what)->check(CLI::IsMember({"et", "nijenhuis"}));
  enumerate->callback([&] { action = [&](Output& o) { return cmd_enumerate(o, a1, what); }; });

  auto* random = app.add_subcommand("random", "Seeded random objects");
  random->add_option("--kind", kind, "matrix, malcev_algebra, two_cochain, one_cochain, nijenhuis_pair");
  random->add_option("--shape", shape, "comma-separated dimensions")->required();
  random->add_option("--field", field, "Q or a prime");
  random->add_option("--count", count);
  random->callback(
      [&] { action = [&](Output& o) { return cmd_random(o, flags, kind, shape, field, count); }; });

  for (auto* sub : app.get_subcommands({})) global_flags(sub);

  CliResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n" + app.help();
    result.exit_code = 2;
    return result;
  }

  Output out(app.get_subcommands().front()->get_name(), flags);
  try {
    result.exit_code = action(out);
    result.out = out.render();
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.code());
    result.out = out.render();
    result.err = std::string(e.what()) + "\n";
  }
  return result;
}

}  // namespace malcev
