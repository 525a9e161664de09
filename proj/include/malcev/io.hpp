#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "malcev/cohomology.hpp"
#include "malcev/deformation.hpp"

namespace malcev {

enum class DocumentKind {
  MalcevAlgebra,
  Dialgebra,
  Representation,
  EmbeddingTensor,
  EtRepresentation,
  TwoCochain,
  OneCochain,
  NijenhuisPair,
  FormalDeformation,
  Extension,
};

std::string_view kind_name(DocumentKind kind);

struct OneCochainDocument {
  Field field;
  CochainShape shape;
  OneCochain cochain;
};

struct NijenhuisDocument {
  Field field;
  NijenhuisPair pair;
};

struct FormalDocument {
  Field field;
  std::size_t n = 0;
  std::size_t m = 0;
  FormalDeformation deformation;
};

struct ExtensionDocument {
  EmbeddingTensor base;
  Extension extension;
};

/// A parsed document. Algebras of both kinds are held as AlgebraData.
struct Document {
  using Payload = std::variant<AlgebraData, Representation, EmbeddingTensor, EtRepresentation,
                               TwoCochain, OneCochainDocument, NijenhuisDocument, FormalDocument,
                               ExtensionDocument>;
  DocumentKind kind;
  Payload payload;

  /// Throws ParseError if the payload is of another type.
  template <class T>
  const T& as() const {
    if (const T* p = std::get_if<T>(&payload)) return *p;
    throw_wrong_kind();
  }

 private:
  [[noreturn]] void throw_wrong_kind() const;
};

/// Parses one JSON document. Nested documents may be inline objects or
/// strings naming a file relative to base_dir. Throws ParseError with the
/// JSON path of the offending value.
Document parse_document(std::string_view text, const std::filesystem::path& base_dir = {});
Document load_document(const std::filesystem::path& file);

/// Canonical form: keys in fixed order, "kind" first, nested documents
/// inline, two-space indentation, trailing newline.
std::string emit_document(const Document& doc);
nlohmann::ordered_json document_json(const Document& doc);

Document make_document(const AlgebraData& a);
Document make_document(const Representation& r);
Document make_document(const EmbeddingTensor& et);
Document make_document(const EtRepresentation& er);
Document make_document(const TwoCochain& z);
Document make_document(const OneCochain& b, const Field& f, const CochainShape& s);
Document make_document(const NijenhuisPair& N, const Field& f);
Document make_document(const FormalDeformation& d, const Field& f, std::size_t n, std::size_t m);
Document make_document(const EmbeddingTensor& base, const Extension& ext);

/// Scalars as JSON: integers as numbers, other rationals as "p/q" strings.
nlohmann::ordered_json scalar_json(const Scalar& s);
nlohmann::ordered_json vector_json(const Vector& v);
nlohmann::ordered_json matrix_json(const Matrix& m);

/// Mirrors VerificationReport: subject, passed, checks (with violations,
/// scalars as strings) and notes.
nlohmann::ordered_json report_json(const VerificationReport& r);

}  // namespace malcev
