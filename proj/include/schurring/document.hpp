#pragma once

#include <string>
#include <vector>

#include "schurring/errors.hpp"
#include "schurring/sring.hpp"

namespace schurring {

/// The on-disk form of an S-ring: {"n": int, "classes": [[int, ...], ...]}.
struct SRingDocument {
  int n = 1;
  std::vector<BasicSet> classes;
};

/// Malformed JSON or a document missing the expected fields.
class ParseError : public Error {
 public:
  using Error::Error;
};

SRingDocument parse_document(const std::string& text);
SRingDocument read_document(const std::string& path);

/// Canonical JSON: classes by minimum element, elements ascending, one
/// class per line.
std::string emit_document(const SRing& a);
void write_document(const SRing& a, const std::string& path);

/// Parses and validates; ValidationError propagates.
SRing to_sring(const SRingDocument& doc);

}  // namespace schurring
