#include "modcanon/canon_doc.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "modcanon/cm.hpp"

namespace modcanon {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr uint64_t kMaxRenderCells = 40'000'000;

// Per-row multiplicity grid of the canon: one row per entry, one aggregate
// row appended last.
std::vector<std::vector<uint32_t>> canon_grid(const CanonDocument& doc) {
  const uint64_t n = doc.n();
  const auto& entries = doc.entries().onsets();
  if ((entries.size() + 1) * n > kMaxRenderCells) {
    throw DocumentInvalidError("grid too large to render");
  }
  std::vector<std::vector<uint32_t>> grid(entries.size() + 1,
                                          std::vector<uint32_t>(n, 0));
  for (size_t row = 0; row < entries.size(); ++row) {
    for (int64_t a : doc.tile().onsets()) {
      const uint64_t t = static_cast<uint64_t>(a + entries[row]) % n;
      ++grid[row][t];
      ++grid.back()[t];
    }
  }
  return grid;
}

char cell_char(uint32_t multiplicity) {
  if (multiplicity == 0) return '.';
  if (multiplicity == 1) return '#';
  if (multiplicity <= 9) return static_cast<char>('0' + multiplicity);
  return '+';
}

} // namespace

CanonDocument::CanonDocument(RhythmicPattern tile, RhythmicPattern entries,
                             uint64_t n, Modulus modulus, Provenance provenance)
    : tile_(std::move(tile)),
      entries_(std::move(entries)),
      n_(n),
      modulus_(modulus),
      compact_(false),
      provenance_(std::move(provenance)) {
  if (!is_tiling(tile_, entries_, n_, modulus_)) {
    throw DocumentInvalidError("(" + tile_.to_string() + ", " +
                               entries_.to_string() + ") does not tile Z_" +
                               std::to_string(n_) + " mod " + modulus_.to_string());
  }
  compact_ = is_compact(tile_, entries_, modulus_) == std::optional<uint64_t>{n_};
  donsets_ = donsets(tile_, entries_, n_, modulus_);
}

bool CanonDocument::same_canon(const CanonDocument& other) const {
  return tile_ == other.tile_ && entries_ == other.entries_ && n_ == other.n_ &&
         modulus_ == other.modulus_ && compact_ == other.compact_ &&
         donsets_ == other.donsets_;
}

std::string CanonDocument::to_json() const {
  ordered_json doc;
  doc["schema"] = kSchema;
  doc["tile"] = std::vector<int64_t>(tile_.onsets().begin(), tile_.onsets().end());
  doc["entries"] =
      std::vector<int64_t>(entries_.onsets().begin(), entries_.onsets().end());
  doc["n"] = n_;
  if (modulus_.is_exact()) {
    doc["modulus"] = "exact";
  } else {
    doc["modulus"] = modulus_.p().value();
  }
  doc["compact"] = compact_;
  ordered_json donset_list = ordered_json::array();
  for (const auto& [time, excess] : donsets_.counts()) {
    ordered_json item;
    item["time"] = time;
    item["excess"] = excess;
    donset_list.push_back(std::move(item));
  }
  doc["donsets"] = std::move(donset_list);
  doc["provenance"] = {{"command", provenance_.command},
                       {"arguments", provenance_.arguments}};
  return doc.dump(2) + "\n";
}

CanonDocument CanonDocument::from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DocumentParseError(std::string("bad JSON: ") + e.what());
  }

  try {
    if (doc.at("schema").get<std::string>() != kSchema) {
      throw DocumentParseError("unknown schema " + doc.at("schema").dump());
    }
    RhythmicPattern tile(doc.at("tile").get<std::vector<int64_t>>());
    RhythmicPattern entries(doc.at("entries").get<std::vector<int64_t>>());
    const uint64_t n = doc.at("n").get<uint64_t>();
    const auto& modulus_field = doc.at("modulus");
    const Modulus modulus = modulus_field.is_string()
                                ? Modulus::exact()
                                : Modulus::prime(modulus_field.get<uint32_t>());
    if (modulus_field.is_string() && modulus_field.get<std::string>() != "exact") {
      throw DocumentParseError("modulus must be a prime or \"exact\"");
    }
    Provenance prov{doc.at("provenance").at("command").get<std::string>(),
                    doc.at("provenance").at("arguments").get<std::string>()};

    CanonDocument out(std::move(tile), std::move(entries), n, modulus,
                      std::move(prov));

    // Stored facts must match the recomputed ones.
    if (doc.at("compact").get<bool>() != out.compact_) {
      throw DocumentInvalidError("stored compact flag disagrees");
    }
    std::vector<std::pair<int64_t, uint32_t>> stored;
    for (const auto& item : doc.at("donsets")) {
      stored.emplace_back(item.at("time").get<int64_t>(),
                          item.at("excess").get<uint32_t>());
    }
    if (OnsetMultiset::from_counts(std::move(stored)) != out.donsets_) {
      throw DocumentInvalidError("stored donsets disagree");
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DocumentParseError(std::string("bad document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DocumentParseError(std::string("bad document: ") + e.what());
  }
}

VerifyOutcome verify_document(const CanonDocument& doc,
                              std::optional<Modulus> modulus_override) {
  const Modulus modulus = modulus_override.value_or(doc.modulus());
  VerifyOutcome out;
  out.tiling = is_tiling(doc.tile(), doc.entries(), doc.n(), modulus);
  if (out.tiling) {
    out.compact_matches =
        (is_compact(doc.tile(), doc.entries(), modulus) ==
         std::optional<uint64_t>{doc.n()}) == doc.compact();
    out.donsets_match =
        donsets(doc.tile(), doc.entries(), doc.n(), modulus) == doc.donset_multiset();
    out.vuza = is_vuza(doc.tile(), doc.entries(), doc.n(), modulus);
  }
  out.t1 = check_t1(doc.tile());
  out.t2 = check_t2(doc.tile());
  return out;
}

std::string verify_report_text(const CanonDocument& doc, const VerifyOutcome& v) {
  std::ostringstream os;
  const auto line = [&](const char* name, bool ok) {
    os << (ok ? "  ok    " : "  FAIL  ") << name << "\n";
  };
  os << "canon (" << doc.tile().to_string() << ", " << doc.entries().to_string()
     << ") over Z_" << doc.n() << " mod " << doc.modulus().to_string() << "\n";
  line("tiling", v.tiling);
  line("compact flag", v.compact_matches);
  line("donsets", v.donsets_match);
  os << "  info  vuza: " << (v.vuza ? "yes" : "no") << "\n";
  os << "  info  tile T1: " << (v.t1 ? "yes" : "no")
     << ", T2: " << (v.t2 ? "yes" : "no") << "\n";
  os << (v.ok() ? "valid" : "INVALID") << "\n";
  return os.str();
}

std::string render_text(const CanonDocument& doc) {
  const auto grid = canon_grid(doc);
  const auto& entries = doc.entries().onsets();
  size_t label_width = 3;
  for (int64_t b : entries) {
    label_width = std::max(label_width, std::to_string(b).size());
  }

  std::ostringstream os;
  for (size_t row = 0; row < entries.size(); ++row) {
    std::string label = std::to_string(entries[row]);
    os << std::string(label_width - label.size(), ' ') << label << " ";
    for (uint32_t m : grid[row]) os << cell_char(m);
    os << "\n";
  }
  os << std::string(label_width, '-') << " " << std::string(doc.n(), '-') << "\n";
  os << std::string(label_width, ' ') << " ";
  for (uint32_t m : grid.back()) os << cell_char(m);
  os << "\n";
  return os.str();
}

std::string render_svg(const CanonDocument& doc) {
  const auto grid = canon_grid(doc);
  const auto& entries = doc.entries().onsets();
  const size_t rows = entries.size();
  const uint64_t n = doc.n();
  const int cell = 12;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n * cell
     << "\" height=\"" << rows * cell << "\" viewBox=\"0 0 " << n * cell << " "
     << rows * cell << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Row 0 sits at the bottom, matching a time/voice grid.
  for (size_t row = 0; row < rows; ++row) {
    const size_t y = (rows - 1 - row) * cell;
    for (uint64_t t = 0; t < n; ++t) {
      const uint32_t m = grid[row][t];
      if (m == 0) continue;
      os << "  <rect x=\"" << t * cell << "\" y=\"" << y << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\""
         << (m > 1 ? "dimgray" : "black") << "\"/>\n";
    }
  }
  // Grid lines.
  for (uint64_t t = 0; t <= n; ++t) {
    os << "  <line x1=\"" << t * cell << "\" y1=\"0\" x2=\"" << t * cell
       << "\" y2=\"" << rows * cell << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
  }
  for (size_t r = 0; r <= rows; ++r) {
    os << "  <line x1=\"0\" y1=\"" << r * cell << "\" x2=\"" << n * cell
       << "\" y2=\"" << r * cell << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace modcanon
