#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "recap/errors.hpp"

namespace recap {

// One bibliographic item from a ranked export.
struct ArticleRecord {
    std::string title;
    std::vector<std::string> authors;
    std::optional<int> year;
    std::optional<std::string> venue;
    std::int64_t rank = 0;  // 1-based position in the source list
    std::string source_label;
};

// Identity of an article: normalized title plus the set of normalized
// family names. Two records with equal keys are the same article, even
// when year or venue differ (preprint/journal pairs).
struct DedupKey {
    std::string normalized_title;
    std::set<std::string> normalized_authors;

    bool operator==(const DedupKey&) const = default;

    // Canonical single-string form, used for hashing and display.
    std::string render() const;
};

struct DedupKeyHash {
    std::size_t operator()(const DedupKey& key) const {
        return std::hash<std::string>{}(key.render());
    }
};

struct RankedList {
    std::vector<ArticleRecord> entries;  // sorted by rank ascending
    std::string label;
};

enum class ExportFormat { Csv, Ris, Bibtex };

// Parses "csv" / "ris" / "bibtex" (case-insensitive); throws UnsupportedFormat.
ExportFormat parse_format_name(const std::string& name);

// Lowercases, folds Latin diacritics to ASCII, turns punctuation into
// word breaks and collapses whitespace. Non-Latin letters pass through.
std::string normalize_title(const std::string& title);

// Family-name token of one author string: the last word of the part
// before a comma (or of the whole string), lowercased and stripped of
// punctuation. Returns "" when nothing survives.
std::string normalize_author_family(const std::string& author);

// Dedup key of a record. Throws EmptyTitle when the title normalizes
// to an empty string.
DedupKey normalize_key(const ArticleRecord& record);

// Parses a bibliographic export into a ranked list; ranks are assigned
// by file order starting at 1. Accepted formats:
//   CSV    header `title,authors,year[,venue]`, authors ;-separated
//   RIS    tags TY, TI (or T1), AU (repeatable), PY, ER; others ignored
//   BibTeX entries with title / author ("and"-separated) / year fields
// Throws ParseError (with record or line number) on malformed input.
RankedList parse_export(std::istream& content, ExportFormat format,
                        const std::string& label);

// Serializes a ranked list back to the CSV contract above.
void write_csv(std::ostream& out, const RankedList& list);

// Keys of the first n entries with duplicates removed, preserving
// first-occurrence order. n beyond the list length uses the whole list.
std::vector<DedupKey> dedup_prefix(const RankedList& list, std::size_t n);

} // namespace recap
