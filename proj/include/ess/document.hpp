#ifndef ESS_DOCUMENT_HPP
#define ESS_DOCUMENT_HPP

#include "ess/catalog.hpp"

#include <stdexcept>
#include <string>

namespace ess {

/// Input malformed at the document level: bad JSON, bad scalar strings,
/// shape mismatches, or a violated type invariant (non-skew gram, broken
/// grading or Jacobi, ...). Documents are rejected, never repaired. The CLI
/// maps this to exit code 2.
class MalformedDocument : public std::runtime_error {
public:
    explicit MalformedDocument(const std::string& what) : std::runtime_error(what) {}
};

/// Parsed interchange document. scalar_field is always "rational"; every
/// scalar is carried as a string "p/q" or "n" in lowest terms with positive
/// denominator, matrices as row-major arrays of such strings.
struct Document {
    SymplecticSpace space;
    std::optional<SymplecticSymmetricPair> pair;
    std::optional<ExtrinsicMorphism> morphism; // requires pair
    std::optional<FundamentalFormData> alpha;
};

/// Strict scalar parse: "-?digits" or "-?digits/digits", lowest terms,
/// denominator > 1 when present, no leading zeros, no "-0".
Scalar parse_scalar(const std::string& text);

Document parse_document(const std::string& json_text);
std::string serialize_document(const Document& doc);

Document document_from_morphism(const ExtrinsicMorphism& m);
Document document_from_entry(const CatalogEntry& e);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace ess

#endif
