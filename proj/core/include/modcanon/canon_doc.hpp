#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "modcanon/pattern.hpp"

namespace modcanon {

// The document text could not be parsed against the schema.
class DocumentParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The document parsed but its fields contradict each other.
class DocumentInvalidError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Provenance {
  std::string command;
  std::string arguments;
};

// Canonical on-disk form of a verified canon. Serialization is byte-stable:
// fixed key order, two-space indent, trailing newline (see
// docs/canon-document.md).
class CanonDocument {
public:
  static constexpr std::string_view kSchema = "canon-doc/1";

  // Computes the compact flag and donsets; throws DocumentInvalidError when
  // (tile, entries, n) is not a tiling under the modulus.
  CanonDocument(RhythmicPattern tile, RhythmicPattern entries, uint64_t n,
                Modulus modulus, Provenance provenance);

  const RhythmicPattern& tile() const { return tile_; }
  const RhythmicPattern& entries() const { return entries_; }
  uint64_t n() const { return n_; }
  Modulus modulus() const { return modulus_; }
  bool compact() const { return compact_; }
  const OnsetMultiset& donset_multiset() const { return donsets_; }
  const Provenance& provenance() const { return provenance_; }

  bool same_canon(const CanonDocument& other) const;

  std::string to_json() const;
  static CanonDocument from_json(std::string_view text);

private:
  RhythmicPattern tile_;
  RhythmicPattern entries_;
  uint64_t n_;
  Modulus modulus_;
  bool compact_;
  OnsetMultiset donsets_;
  Provenance provenance_;
};

struct VerifyOutcome {
  bool tiling = false;
  bool compact_matches = false;
  bool donsets_match = false;
  bool vuza = false; // informational
  bool t1 = false;   // informational
  bool t2 = false;   // informational

  bool ok() const { return tiling && compact_matches && donsets_match; }
};

// Re-derives every stored fact of the document; with a modulus override the
// tiling is re-checked under that modulus instead.
VerifyOutcome verify_document(const CanonDocument& doc,
                              std::optional<Modulus> modulus_override = {});
std::string verify_report_text(const CanonDocument& doc, const VerifyOutcome& v);

// Text grid: one row per entry plus an aggregate row; '#' marks multiplicity
// one, digits 2-9 higher multiplicities, '+' past nine, '.' empty.
std::string render_text(const CanonDocument& doc);

// Same grid as nested rectangles, one voice per row, origin at bottom left.
std::string render_svg(const CanonDocument& doc);

} // namespace modcanon
