#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "malcev/cohomology.hpp"
#include "malcev/error.hpp"
#include "malcev/fixtures.hpp"
#include "malcev/io.hpp"
#include "support.hpp"

using namespace malcev;
using namespace malcev::testing;
namespace fx = malcev::fixtures;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = MALCEV_FIXTURE_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_error(const std::string& text) {
  try {
    (void)parse_document(text);
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ParseError) << err.what();
    return err.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

const char* kSl2 = R"({"kind":"malcev_algebra","field":"Q","dim":3,"bracket":[
  {"i":0,"j":1,"c":[0,2,0]},{"i":0,"j":2,"c":[0,0,-2]},{"i":1,"j":2,"c":[1,0,0]}]})";

}  // namespace

TEST(Parse, Sl2Document) {
  const Document d = parse_document(kSl2);
  EXPECT_EQ(d.kind, DocumentKind::MalcevAlgebra);
  const AlgebraData& a = d.as<AlgebraData>();
  EXPECT_EQ(a.dim(), 3u);
  EXPECT_EQ(a.entries().size(), 3u);
  EXPECT_EQ(a, fx::sl2(Q()));
}

TEST(Parse, FoldsReversedPairs) {
  const Document d = parse_document(
      R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[{"i":1,"j":0,"c":[0,-1]}]})");
  EXPECT_EQ(d.as<AlgebraData>(), fx::aff1(Q()));
}

TEST(Parse, RejectsDuplicatesAfterFolding) {
  const std::string msg = parse_error(
      R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[{"i":0,"j":1,"c":[0,1]},{"i":1,"j":0,"c":[0,-1]}]})");
  EXPECT_NE(msg.find("bracket"), std::string::npos);
}

TEST(Parse, ScalarGrammar) {
  parse_error(R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[{"i":0,"j":1,"c":["2/-4",0]}]})");
  parse_error(R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[{"i":0,"j":1,"c":["1/0",0]}]})");
  parse_error(R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[{"i":0,"j":1,"c":["x",0]}]})");
  parse_error(R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[{"i":0,"j":1,"c":[0.5,0]}]})");
  parse_error(R"({"kind":"malcev_algebra","field":{"Fp":3},"dim":2,"bracket":[{"i":0,"j":1,"c":["1/2",0]}]})");
  const Document d = parse_document(
      R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[{"i":0,"j":1,"c":["-2/4","3"]}]})");
  const Vector& c = d.as<AlgebraData>().product(0, 1);
  EXPECT_EQ(c[0], Scalar::from_fraction(Q(), -1, 2));
  EXPECT_EQ(c[0].to_string(), "-1/2");
  EXPECT_EQ(c[1], s(Q(), 3));
  const Document m = parse_document(
      R"({"kind":"malcev_algebra","field":{"Fp":3},"dim":2,"bracket":[{"i":0,"j":1,"c":[-1,"7"]}]})");
  EXPECT_EQ(m.as<AlgebraData>().product(0, 1), vec(F(3), {2, 1}));
}

TEST(Parse, RejectsMalformedDocuments) {
  parse_error("{");
  parse_error(R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[],"extra":1})");
  parse_error(R"({"kind":"malcev_algebra","field":"Q","dim":2})");
  parse_error(R"({"kind":"nonsense"})");
  parse_error(R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[{"i":0,"j":2,"c":[0,1]}]})");
  parse_error(R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[{"i":1,"j":1,"c":[0,1]}]})");
  parse_error(R"({"kind":"malcev_algebra","field":"Q","dim":2,"bracket":[{"i":0,"j":1,"c":[0]}]})");
  parse_error(R"({"kind":"malcev_algebra","field":{"Fp":4},"dim":1,"bracket":[]})");
  const std::string msg = parse_error("{\n  \"kind\": \"malcev_algebra\",\n  oops\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(Parse, RejectsFieldMismatch) {
  const std::string inner = slurp(kFixtures / "sl2.json");
  const std::string rep = R"({"kind":"representation","algebra":)" + inner +
                          R"(,"module_dim":1,"rho":[[[0]],[[0]],[[{"Fp":3}]]]})";
  EXPECT_THROW((void)parse_document(rep), Error);
}

TEST(Parse, NestedDocumentsByPath) {
  const Document d = parse_document(R"({"kind":"representation","algebra":"aff1.json","module_dim":1,"rho":[[[1]],[[0]]]})",
                                    kFixtures);
  EXPECT_EQ(d.as<Representation>(), fx::aff1_line(Q()));
  EXPECT_THROW((void)parse_document(R"({"kind":"representation","algebra":"missing.json","module_dim":1,"rho":[]})",
                                    kFixtures),
               Error);
}

TEST(Parse, WrongKindAccess) {
  const Document d = parse_document(kSl2);
  try {
    (void)d.as<Representation>();
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ParseError);
  }
}

TEST(RoundTrip, EveryFixtureIsCanonical) {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".json") continue;
    const std::string text = slurp(entry.path());
    const Document d = load_document(entry.path());
    EXPECT_EQ(emit_document(d), text) << entry.path();
    EXPECT_EQ(emit_document(parse_document(emit_document(d))), text) << entry.path();
    ++files;
  }
  EXPECT_GE(files, 20u);
}

TEST(RoundTrip, FixtureFilesMatchLibraryObjects) {
  const Field q = Q();
  EXPECT_EQ(load_document(kFixtures / "abelian2.json").as<AlgebraData>(), fx::abelian(q, 2));
  EXPECT_EQ(load_document(kFixtures / "aff1.json").as<AlgebraData>(), fx::aff1(q));
  EXPECT_EQ(load_document(kFixtures / "sl2.json").as<AlgebraData>(), fx::sl2(q));
  EXPECT_EQ(load_document(kFixtures / "m7.json").as<AlgebraData>(), fx::m7(q));
  EXPECT_EQ(load_document(kFixtures / "aff1_line.json").as<Representation>(), fx::aff1_line(q));
  EXPECT_EQ(load_document(kFixtures / "sl2_adjoint.json").as<Representation>(), adjoint_rep(fx::sl2(q)));
  EXPECT_EQ(load_document(kFixtures / "et_aff1.json").as<EmbeddingTensor>(), fx::identity_on_adjoint(fx::aff1(q)));
  EXPECT_EQ(load_document(kFixtures / "et_zero.json").as<EmbeddingTensor>(), fx::zero_tensor(adjoint_rep(fx::sl2(q))));
  EXPECT_EQ(load_document(kFixtures / "et_aff1_line.json").as<EmbeddingTensor>(), fx::aff1_line_tensor(q));
  EXPECT_EQ(load_document(kFixtures / "etrep_aff1_line.json").as<EtRepresentation>(), fx::aff1_line_coefficients(q));
  EXPECT_EQ(load_document(kFixtures / "etrep_fully_abelian.json").as<EtRepresentation>(), fx::fully_abelian(q));
  EXPECT_EQ(load_document(kFixtures / "et_aff1_f2.json").as<EmbeddingTensor>(),
            fx::identity_on_adjoint(fx::aff1(F(2))));
  EXPECT_EQ(load_document(kFixtures / "cocycle_aff1_line.json").as<TwoCochain>(),
            h2(fx::aff1_line_coefficients(q)).representatives.at(0));
}

TEST(RoundTrip, EveryKindThroughMakeDocument) {
  const Field q = Q();
  const EtRepresentation er = fx::aff1_line_coefficients(q);
  const TwoCochain z = h2(er).representatives.at(0);
  OneCochain b = OneCochain::zero(q, er.shape());
  b.b0.at(0, 0) = Scalar::from_fraction(q, 1, 3);
  const EmbeddingTensor sl2 = fx::identity_on_adjoint(fx::sl2(q));
  const NijenhuisPair N{Matrix::identity(q, 3), Matrix::identity(q, 3)};
  const DeformationTriple d = nijenhuis_to_deformation(sl2, N);
  const std::vector<Document> docs = {
      make_document(fx::m7(q)),
      make_document(induce_dialgebra(sl2, Side::Left)),
      make_document(adjoint_rep(fx::sl2(q))),
      make_document(sl2),
      make_document(er),
      make_document(z),
      make_document(b, q, er.shape()),
      make_document(N, q),
      make_document(FormalDeformation{{d, d + d}}, q, 3, 3),
      make_document(er.base(), extension_from_cocycle(er, z)),
  };
  for (const auto& doc : docs) {
    const std::string text = emit_document(doc);
    EXPECT_EQ(text.substr(0, 11), "{\n  \"kind\":");
    const Document back = parse_document(text);
    EXPECT_EQ(back.kind, doc.kind) << kind_name(doc.kind);
    EXPECT_EQ(emit_document(back), text) << kind_name(doc.kind);
  }
  EXPECT_EQ(parse_document(emit_document(docs[5])).as<TwoCochain>(), z);
  EXPECT_EQ(parse_document(emit_document(docs[6])).as<OneCochainDocument>().cochain, b);
}

TEST(ReportJson, MirrorsReport) {
  const AlgebraData bad = AlgebraData::skew(
      Q(), 3, {{0, 1, vec(Q(), {0, 2, 0})}, {0, 2, vec(Q(), {0, 0, -2})}, {1, 2, vec(Q(), {1, 1, 0})}});
  const VerificationReport r = check_malcev(bad);
  const auto j = report_json(r);
  EXPECT_EQ(j["passed"], false);
  ASSERT_FALSE(j["checks"].empty());
  EXPECT_FALSE(j["checks"][0]["violations"].empty());
  EXPECT_EQ(j.dump(), report_json(check_malcev(bad)).dump());
}
