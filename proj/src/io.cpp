#include "malcev/io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <utility>

#include "malcev/error.hpp"

namespace malcev {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

constexpr std::pair<DocumentKind, std::string_view> kKinds[] = {
    {DocumentKind::MalcevAlgebra, "malcev_algebra"},
    {DocumentKind::Dialgebra, "dialgebra"},
    {DocumentKind::Representation, "representation"},
    {DocumentKind::EmbeddingTensor, "embedding_tensor"},
    {DocumentKind::EtRepresentation, "et_representation"},
    {DocumentKind::TwoCochain, "two_cochain"},
    {DocumentKind::OneCochain, "one_cochain"},
    {DocumentKind::NijenhuisPair, "nijenhuis_pair"},
    {DocumentKind::FormalDeformation, "formal_deformation"},
    {DocumentKind::Extension, "extension"},
};

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::ParseError, (path.empty() ? std::string("/") : path) + ": " + message);
}

/// A JSON value together with its path and the directory that relative
/// document references resolve against.
struct Node {
  const json& value;
  std::string path;
  std::filesystem::path base_dir;

  Node at(const std::string& key) const {
    if (!value.is_object()) fail(path, "expected an object");
    auto it = value.find(key);
    if (it == value.end()) fail(path, "missing field \"" + key + "\"");
    return {*it, path + "/" + key, base_dir};
  }
  Node at(std::size_t i) const { return {value[i], path + "/" + std::to_string(i), base_dir}; }

  /// Rejects fields outside the allowed set.
  void expect_fields(std::initializer_list<std::string_view> allowed) const {
    if (!value.is_object()) fail(path, "expected an object");
    for (auto it = value.begin(); it != value.end(); ++it) {
      bool known = false;
      for (auto a : allowed) known = known || it.key() == a;
      if (!known) fail(path, "unknown field \"" + it.key() + "\"");
    }
  }

  const json& array(std::size_t expected) const {
    if (!value.is_array()) fail(path, "expected an array");
    if (value.size() != expected)
      fail(path, "expected " + std::to_string(expected) + " entries, found " +
                     std::to_string(value.size()));
    return value;
  }

  std::size_t count() const {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0))
      fail(path, "expected a non-negative integer");
    return value.get<std::size_t>();
  }

  std::string string() const {
    if (!value.is_string()) fail(path, "expected a string");
    return value.get<std::string>();
  }
};

Field parse_field(const Node& node) {
  if (node.value.is_string()) {
    if (node.value.get<std::string>() == "Q") return Field::rational();
    fail(node.path, "unknown field \"" + node.value.get<std::string>() + "\"");
  }
  node.expect_fields({"Fp"});
  const std::size_t p = node.at("Fp").count();
  try {
    return Field::prime(p);
  } catch (const Error& e) {
    fail(node.path, e.what());
  }
}

ojson field_json(const Field& f) {
  if (f.is_rational()) return "Q";
  ojson out = ojson::object();
  out["Fp"] = f.modulus();
  return out;
}

Scalar parse_scalar(const Node& node, const Field& f) {
  static const std::regex rational_literal("-?[0-9]+(/[1-9][0-9]*)?");
  static const std::regex integer_literal("-?[0-9]+");
  std::string text;
  if (node.value.is_number_integer()) {
    text = node.value.dump();
  } else if (node.value.is_string()) {
    text = node.value.get<std::string>();
    if (!std::regex_match(text, f.is_rational() ? rational_literal : integer_literal))
      fail(node.path, "malformed scalar \"" + text + "\"" +
                          (f.is_rational() ? "" : " (F_p scalars are plain integers)"));
  } else {
    fail(node.path, "expected a scalar (integer or \"p/q\" string)");
  }
  const auto slash = text.find('/');
  const mpz_class num(text.substr(0, slash));
  const mpz_class den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
  return Scalar::from_fraction(f, num, den);
}

Vector parse_vector(const Node& node, const Field& f, std::size_t n) {
  node.array(n);
  Vector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(parse_scalar(node.at(i), f));
  return out;
}

Matrix parse_matrix(const Node& node, const Field& f, std::size_t rows, std::size_t cols) {
  node.array(rows);
  Matrix out(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = parse_vector(node.at(r), f, cols);
    for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = row[c];
  }
  return out;
}

std::vector<Matrix> parse_matrices(const Node& node, const Field& f, std::size_t count,
                                   std::size_t rows, std::size_t cols) {
  node.array(count);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(parse_matrix(node.at(i), f, rows, cols));
  return out;
}

/// Square matrix of unknown size.
Matrix parse_square(const Node& node, const Field& f) {
  if (!node.value.is_array()) fail(node.path, "expected an array");
  const std::size_t n = node.value.size();
  return parse_matrix(node, f, n, n);
}

/// {"i","j","c"} entries. For skew tables an entry with i > j is stored on
/// (j, i) with its sign flipped; a pair given twice is rejected.
std::vector<BracketEntry> parse_table(const Node& node, const Field& f, std::size_t dim,
                                      std::size_t width, bool skew) {
  if (!node.value.is_array()) fail(node.path, "expected an array");
  std::vector<BracketEntry> out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < node.value.size(); ++k) {
    const Node e = node.at(k);
    e.expect_fields({"i", "j", "c"});
    std::size_t i = e.at("i").count(), j = e.at("j").count();
    if (i >= dim || j >= dim)
      fail(e.path, "index out of range for dimension " + std::to_string(dim));
    Vector c = parse_vector(e.at("c"), f, width);
    if (skew) {
      if (i == j) {
        if (!is_zero(c)) fail(e.path, "nonzero entry with i = j in a skew table");
        continue;
      }
      if (i > j) {
        std::swap(i, j);
        c = -c;
      }
    }
    if (!seen.insert({i, j}).second)
      fail(e.path, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") given twice");
    out.push_back({i, j, std::move(c)});
  }
  return out;
}

ojson table_json(const std::vector<BracketEntry>& entries) {
  ojson out = ojson::array();
  for (const auto& e : entries) {
    if (is_zero(e.coeffs)) continue;
    ojson entry = ojson::object();
    entry["i"] = e.i;
    entry["j"] = e.j;
    entry["c"] = vector_json(e.coeffs);
    out.push_back(std::move(entry));
  }
  return out;
}

std::string expect_kind(const Node& node) {
  return node.at("kind").string();
}

Document parse_node(const Node& node);

/// Inline object or a path to another document.
Document nested(const Node& node, DocumentKind kind) {
  Document doc = [&] {
    if (node.value.is_string()) {
      const std::filesystem::path file = node.base_dir / node.value.get<std::string>();
      try {
        return load_document(file);
      } catch (const Error& e) {
        fail(node.path, "in " + file.string() + ": " + e.what());
      }
    }
    return parse_node(node);
  }();
  if (doc.kind != kind)
    fail(node.path, "expected a " + std::string(kind_name(kind)) + " document, found " +
                        std::string(kind_name(doc.kind)));
  return doc;
}

CochainShape parse_dims(const Node& node, bool full) {
  if (full)
    node.expect_fields({"n", "m", "v", "w"});
  else
    node.expect_fields({"n", "m"});
  CochainShape s;
  s.n = node.at("n").count();
  s.m = node.at("m").count();
  if (full) {
    s.v = node.at("v").count();
    s.w = node.at("w").count();
  } else {
    s.v = s.m;
    s.w = s.n;
  }
  return s;
}

ojson dims_json(const CochainShape& s, bool full) {
  ojson out = ojson::object();
  out["n"] = s.n;
  out["m"] = s.m;
  if (full) {
    out["v"] = s.v;
    out["w"] = s.w;
  }
  return out;
}

/// theta / omega / nu blocks shared by cochains and deformation terms.
TwoCochain parse_cochain_blocks(const Node& node, const Field& f, const CochainShape& s) {
  Matrix theta = parse_matrix(node.at("theta"), f, s.w, s.m);
  TwoCochain z = TwoCochain::zero(f, s);
  z.theta() = std::move(theta);
  for (auto& e : parse_table(node.at("omega"), f, s.n, s.w, true)) z.set_omega(e.i, e.j, e.coeffs);
  z.nu() = parse_matrices(node.at("nu"), f, s.n, s.v, s.m);
  return z;
}

void cochain_blocks_json(ojson& out, const TwoCochain& z) {
  const std::size_t n = z.shape().n;
  std::vector<BracketEntry> omega;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) omega.push_back({i, j, z.omega(i, j)});
  out["theta"] = matrix_json(z.theta());
  out["omega"] = table_json(omega);
  ojson nu = ojson::array();
  for (const auto& m : z.nu()) nu.push_back(matrix_json(m));
  out["nu"] = std::move(nu);
}

template <class F>
auto rethrow_as_parse_error(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(path, e.what());
  }
}

Document parse_node(const Node& node) {
  const std::string kind = expect_kind(node);
  if (kind == "malcev_algebra" || kind == "dialgebra") {
    const bool skew = kind == "malcev_algebra";
    node.expect_fields({"kind", "field", "dim", "bracket"});
    const Field f = parse_field(node.at("field"));
    const std::size_t dim = node.at("dim").count();
    auto entries = parse_table(node.at("bracket"), f, dim, dim, skew);
    auto a = rethrow_as_parse_error(node.path, [&] {
      return skew ? AlgebraData::skew(f, dim, entries) : AlgebraData::general(f, dim, entries);
    });
    return {skew ? DocumentKind::MalcevAlgebra : DocumentKind::Dialgebra, std::move(a)};
  }
  if (kind == "representation") {
    node.expect_fields({"kind", "algebra", "module_dim", "rho"});
    AlgebraData a = nested(node.at("algebra"), DocumentKind::MalcevAlgebra).as<AlgebraData>();
    const std::size_t m = node.at("module_dim").count();
    auto rho = parse_matrices(node.at("rho"), a.field(), a.dim(), m, m);
    return {DocumentKind::Representation,
            rethrow_as_parse_error(node.path, [&] { return Representation(a, m, rho); })};
  }
  if (kind == "embedding_tensor") {
    node.expect_fields({"kind", "representation", "T"});
    Representation r =
        nested(node.at("representation"), DocumentKind::Representation).as<Representation>();
    Matrix T = parse_matrix(node.at("T"), r.field(), r.algebra_dim(), r.module_dim());
    return {DocumentKind::EmbeddingTensor,
            rethrow_as_parse_error(node.path, [&] { return EmbeddingTensor(r, T); })};
  }
  if (kind == "et_representation") {
    node.expect_fields(
        {"kind", "embedding_tensor", "dim_V", "dim_W", "Tprime", "rho1", "rho2", "rho3"});
    EmbeddingTensor et =
        nested(node.at("embedding_tensor"), DocumentKind::EmbeddingTensor).as<EmbeddingTensor>();
    const Field& f = et.field();
    const std::size_t n = et.algebra_dim(), m = et.module_dim();
    const std::size_t v = node.at("dim_V").count(), w = node.at("dim_W").count();
    Matrix Tp = parse_matrix(node.at("Tprime"), f, w, v);
    auto rho1 = parse_matrices(node.at("rho1"), f, n, v, v);
    auto rho2 = parse_matrices(node.at("rho2"), f, n, w, w);
    auto rho3 = parse_matrices(node.at("rho3"), f, m, v, w);
    return {DocumentKind::EtRepresentation, rethrow_as_parse_error(node.path, [&] {
              return EtRepresentation(et, v, w, Tp, rho1, rho2, rho3);
            })};
  }
  if (kind == "two_cochain") {
    node.expect_fields({"kind", "field", "dims", "theta", "omega", "nu"});
    const Field f = parse_field(node.at("field"));
    const CochainShape s = parse_dims(node.at("dims"), true);
    return {DocumentKind::TwoCochain, parse_cochain_blocks(node, f, s)};
  }
  if (kind == "one_cochain") {
    node.expect_fields({"kind", "field", "dims", "b0", "b1"});
    const Field f = parse_field(node.at("field"));
    const CochainShape s = parse_dims(node.at("dims"), true);
    OneCochain b{parse_matrix(node.at("b0"), f, s.v, s.m), parse_matrix(node.at("b1"), f, s.w, s.n)};
    return {DocumentKind::OneCochain, OneCochainDocument{f, s, std::move(b)}};
  }
  if (kind == "nijenhuis_pair") {
    node.expect_fields({"kind", "field", "N0", "N1"});
    const Field f = parse_field(node.at("field"));
    NijenhuisPair N{parse_square(node.at("N0"), f), parse_square(node.at("N1"), f)};
    return {DocumentKind::NijenhuisPair, NijenhuisDocument{f, std::move(N)}};
  }
  if (kind == "formal_deformation") {
    node.expect_fields({"kind", "field", "dims", "order", "terms"});
    const Field f = parse_field(node.at("field"));
    const CochainShape s = parse_dims(node.at("dims"), false);
    const std::size_t order = node.at("order").count();
    const Node terms = node.at("terms");
    terms.array(order);
    FormalDeformation d;
    for (std::size_t i = 0; i < order; ++i) {
      const Node t = terms.at(i);
      t.expect_fields({"theta", "omega", "nu"});
      d.terms.push_back(parse_cochain_blocks(t, f, s));
    }
    return {DocumentKind::FormalDeformation, FormalDocument{f, s.n, s.m, std::move(d)}};
  }
  if (kind == "extension") {
    node.expect_fields({"kind", "base", "hat", "i0", "i1", "p0", "p1"});
    EmbeddingTensor base =
        nested(node.at("base"), DocumentKind::EmbeddingTensor).as<EmbeddingTensor>();
    EmbeddingTensor hat = nested(node.at("hat"), DocumentKind::EmbeddingTensor).as<EmbeddingTensor>();
    if (base.field() != hat.field()) fail(node.path, "base and hat over different fields");
    const std::size_t n = base.algebra_dim(), m = base.module_dim();
    const std::size_t nh = hat.algebra_dim(), mh = hat.module_dim();
    if (nh < n || mh < m) fail(node.path, "hat is smaller than the base");
    const Field& f = base.field();
    Extension ext{hat,
                  parse_matrix(node.at("i0"), f, mh, mh - m),
                  parse_matrix(node.at("i1"), f, nh, nh - n),
                  parse_matrix(node.at("p0"), f, m, mh),
                  parse_matrix(node.at("p1"), f, n, nh)};
    return {DocumentKind::Extension, ExtensionDocument{std::move(base), std::move(ext)}};
  }
  fail(node.path + "/kind", "unknown document kind \"" + kind + "\"");
}

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

std::string_view kind_name(DocumentKind kind) {
  for (const auto& [k, name] : kKinds)
    if (k == kind) return name;
  return "unknown";
}

void Document::throw_wrong_kind() const {
  throw Error(ErrorCode::ParseError,
              "unexpected document kind " + std::string(kind_name(kind)));
}

Document parse_document(std::string_view text, const std::filesystem::path& base_dir) {
  json value;
  try {
    value = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                "invalid JSON at " + position(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  return parse_node({value, "", base_dir});
}

Document load_document(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), file.parent_path());
}

ojson scalar_json(const Scalar& s) {
  if (!s.is_rational()) return s.residue();
  const mpq_class& q = s.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.to_string();
}

ojson vector_json(const Vector& v) {
  ojson out = ojson::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

ojson matrix_json(const Matrix& m) {
  ojson out = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

namespace {

ojson matrices_json(const std::vector<Matrix>& ms) {
  ojson out = ojson::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

ojson header(DocumentKind kind) {
  ojson out = ojson::object();
  out["kind"] = std::string(kind_name(kind));
  return out;
}

ojson algebra_json(const AlgebraData& a) {
  ojson out = header(a.is_skew() ? DocumentKind::MalcevAlgebra : DocumentKind::Dialgebra);
  out["field"] = field_json(a.field());
  out["dim"] = a.dim();
  out["bracket"] = table_json(a.entries());
  return out;
}

ojson representation_json(const Representation& r) {
  ojson out = header(DocumentKind::Representation);
  out["algebra"] = algebra_json(r.algebra());
  out["module_dim"] = r.module_dim();
  out["rho"] = matrices_json(r.rho());
  return out;
}

ojson tensor_json(const EmbeddingTensor& et) {
  ojson out = header(DocumentKind::EmbeddingTensor);
  out["representation"] = representation_json(et.rep());
  out["T"] = matrix_json(et.T());
  return out;
}

struct JsonVisitor {
  ojson operator()(const AlgebraData& a) const { return algebra_json(a); }
  ojson operator()(const Representation& r) const { return representation_json(r); }
  ojson operator()(const EmbeddingTensor& et) const { return tensor_json(et); }
  ojson operator()(const EtRepresentation& er) const {
    ojson out = header(DocumentKind::EtRepresentation);
    out["embedding_tensor"] = tensor_json(er.base());
    out["dim_V"] = er.dim_v();
    out["dim_W"] = er.dim_w();
    out["Tprime"] = matrix_json(er.Tprime());
    out["rho1"] = matrices_json(er.rho1());
    out["rho2"] = matrices_json(er.rho2());
    out["rho3"] = matrices_json(er.rho3());
    return out;
  }
  ojson operator()(const TwoCochain& z) const {
    ojson out = header(DocumentKind::TwoCochain);
    out["field"] = field_json(z.field());
    out["dims"] = dims_json(z.shape(), true);
    cochain_blocks_json(out, z);
    return out;
  }
  ojson operator()(const OneCochainDocument& d) const {
    ojson out = header(DocumentKind::OneCochain);
    out["field"] = field_json(d.field);
    out["dims"] = dims_json(d.shape, true);
    out["b0"] = matrix_json(d.cochain.b0);
    out["b1"] = matrix_json(d.cochain.b1);
    return out;
  }
  ojson operator()(const NijenhuisDocument& d) const {
    ojson out = header(DocumentKind::NijenhuisPair);
    out["field"] = field_json(d.field);
    out["N0"] = matrix_json(d.pair.N0);
    out["N1"] = matrix_json(d.pair.N1);
    return out;
  }
  ojson operator()(const FormalDocument& d) const {
    ojson out = header(DocumentKind::FormalDeformation);
    out["field"] = field_json(d.field);
    out["dims"] = dims_json({d.n, d.m, d.m, d.n}, false);
    out["order"] = d.deformation.order();
    ojson terms = ojson::array();
    for (const auto& t : d.deformation.terms) {
      ojson term = ojson::object();
      cochain_blocks_json(term, t);
      terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
  }
  ojson operator()(const ExtensionDocument& d) const {
    ojson out = header(DocumentKind::Extension);
    out["base"] = tensor_json(d.base);
    out["hat"] = tensor_json(d.extension.hat);
    out["i0"] = matrix_json(d.extension.i0);
    out["i1"] = matrix_json(d.extension.i1);
    out["p0"] = matrix_json(d.extension.p0);
    out["p1"] = matrix_json(d.extension.p1);
    return out;
  }
};

}  // namespace

ojson document_json(const Document& doc) { return std::visit(JsonVisitor{}, doc.payload); }

std::string emit_document(const Document& doc) { return document_json(doc).dump(2) + "\n"; }

Document make_document(const AlgebraData& a) {
  return {a.is_skew() ? DocumentKind::MalcevAlgebra : DocumentKind::Dialgebra, a};
}
Document make_document(const Representation& r) { return {DocumentKind::Representation, r}; }
Document make_document(const EmbeddingTensor& et) { return {DocumentKind::EmbeddingTensor, et}; }
Document make_document(const EtRepresentation& er) { return {DocumentKind::EtRepresentation, er}; }
Document make_document(const TwoCochain& z) { return {DocumentKind::TwoCochain, z}; }
Document make_document(const OneCochain& b, const Field& f, const CochainShape& s) {
  return {DocumentKind::OneCochain, OneCochainDocument{f, s, b}};
}
Document make_document(const NijenhuisPair& N, const Field& f) {
  return {DocumentKind::NijenhuisPair, NijenhuisDocument{f, N}};
}
Document make_document(const FormalDeformation& d, const Field& f, std::size_t n, std::size_t m) {
  return {DocumentKind::FormalDeformation, FormalDocument{f, n, m, d}};
}
Document make_document(const EmbeddingTensor& base, const Extension& ext) {
  return {DocumentKind::Extension, ExtensionDocument{base, ext}};
}

ojson report_json(const VerificationReport& r) {
  ojson out = ojson::object();
  out["subject"] = r.subject();
  out["passed"] = r.passed();
  ojson checks = ojson::array();
  for (const auto& c : r.checks()) {
    ojson check = ojson::object();
    check["name"] = c.name;
    check["passed"] = c.passed;
    check["required"] = c.required;
    check["evaluated"] = c.evaluated;
    ojson violations = ojson::array();
    for (const auto& v : c.violations) {
      ojson item = ojson::object();
      item["tuple"] = v.tuple;
      ojson lhs = ojson::array(), rhs = ojson::array();
      for (const auto& s : v.lhs) lhs.push_back(s.to_string());
      for (const auto& s : v.rhs) rhs.push_back(s.to_string());
      item["lhs"] = std::move(lhs);
      item["rhs"] = std::move(rhs);
      violations.push_back(std::move(item));
    }
    check["violations"] = std::move(violations);
    check["notes"] = c.notes;
    checks.push_back(std::move(check));
  }
  out["checks"] = std::move(checks);
  out["notes"] = r.notes();
  return out;
}

}  // namespace malcev
