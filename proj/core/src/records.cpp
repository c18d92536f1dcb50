#include "recap/records.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

#include "recap/csv.hpp"

namespace recap {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower_ascii(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// Decodes one UTF-8 code point at `pos`; advances `pos`. Malformed
// bytes decode as U+FFFD so they act as word breaks downstream.
char32_t next_codepoint(const std::string& s, std::size_t& pos) {
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]); };
    unsigned char b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
    else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
    else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
    else { ++pos; return 0xFFFD; }
    if (pos + len > s.size()) { ++pos; return 0xFFFD; }
    for (int i = 1; i < len; ++i) {
        unsigned char b = byte(pos + i);
        if ((b & 0xC0) != 0x80) { ++pos; return 0xFFFD; }
        cp = (cp << 6) | (b & 0x3F);
    }
    pos += len;
    return cp;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

// ASCII fold for Latin-1 Supplement and Latin Extended-A letters.
// Returns nullptr when the code point is not covered.
const char* fold_latin(char32_t cp) {
    switch (cp) {
    case 0xC0: case 0xC1: case 0xC2: case 0xC3: case 0xC4: case 0xC5:
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5: return "a";
    case 0xC6: case 0xE6: return "ae";
    case 0xC7: case 0xE7: return "c";
    case 0xC8: case 0xC9: case 0xCA: case 0xCB:
    case 0xE8: case 0xE9: case 0xEA: case 0xEB: return "e";
    case 0xCC: case 0xCD: case 0xCE: case 0xCF:
    case 0xEC: case 0xED: case 0xEE: case 0xEF: return "i";
    case 0xD0: case 0xF0: return "d";
    case 0xD1: case 0xF1: return "n";
    case 0xD2: case 0xD3: case 0xD4: case 0xD5: case 0xD6: case 0xD8:
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8: return "o";
    case 0xD9: case 0xDA: case 0xDB: case 0xDC:
    case 0xF9: case 0xFA: case 0xFB: case 0xFC: return "u";
    case 0xDD: case 0xFD: case 0xFF: return "y";
    case 0xDE: case 0xFE: return "th";
    case 0xDF: return "ss";
    default: break;
    }
    if (cp >= 0x100 && cp <= 0x105) return "a";
    if (cp >= 0x106 && cp <= 0x10D) return "c";
    if (cp >= 0x10E && cp <= 0x111) return "d";
    if (cp >= 0x112 && cp <= 0x11B) return "e";
    if (cp >= 0x11C && cp <= 0x123) return "g";
    if (cp >= 0x124 && cp <= 0x127) return "h";
    if (cp >= 0x128 && cp <= 0x131) return "i";
    if (cp == 0x132 || cp == 0x133) return "ij";
    if (cp == 0x134 || cp == 0x135) return "j";
    if (cp >= 0x136 && cp <= 0x138) return "k";
    if (cp >= 0x139 && cp <= 0x142) return "l";
    if (cp >= 0x143 && cp <= 0x14B) return "n";
    if (cp >= 0x14C && cp <= 0x151) return "o";
    if (cp == 0x152 || cp == 0x153) return "oe";
    if (cp >= 0x154 && cp <= 0x159) return "r";
    if (cp >= 0x15A && cp <= 0x161) return "s";
    if (cp >= 0x162 && cp <= 0x167) return "t";
    if (cp >= 0x168 && cp <= 0x173) return "u";
    if (cp == 0x174 || cp == 0x175) return "w";
    if (cp >= 0x176 && cp <= 0x178) return "y";
    if (cp >= 0x179 && cp <= 0x17E) return "z";
    if (cp == 0x17F) return "s";
    return nullptr;
}

// Shared normalization walk: alphanumerics are lowered/folded into the
// output, everything else becomes a separator. `separator` is what a
// word break renders as ("" for author tokens, " " for titles).
std::string normalize_text(const std::string& input, const char* separator) {
    std::string out;
    bool pending_break = false;
    std::size_t pos = 0;
    auto emit_break = [&] {
        if (!out.empty()) pending_break = true;
    };
    while (pos < input.size()) {
        char32_t cp = next_codepoint(input, pos);
        const char* folded = nullptr;
        char ascii_buf[2] = {0, 0};
        if (cp < 0x80) {
            if (std::isalnum(static_cast<int>(cp))) {
                ascii_buf[0] = static_cast<char>(std::tolower(static_cast<int>(cp)));
                folded = ascii_buf;
            }
        } else {
            folded = fold_latin(cp);
        }
        if (folded != nullptr) {
            if (pending_break) {
                out += separator;
                pending_break = false;
            }
            out += folded;
        } else if (cp >= 0x80 && cp != 0xFFFD) {
            // A letter from a script the fold table does not cover:
            // keep it verbatim so such titles stay distinct.
            if (pending_break) {
                out += separator;
                pending_break = false;
            }
            append_utf8(out, cp);
        } else {
            emit_break();
        }
    }
    return out;
}

std::optional<int> parse_year(const std::string& raw, const std::string& where) {
    std::string text = trim(raw);
    if (text.empty()) return std::nullopt;
    // RIS dates look like "2007/07/01"; take the leading integer.
    std::size_t end = 0;
    while (end < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[end])) || (end == 0 && text[end] == '-')))
        ++end;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + end, value);
    if (ec != std::errc() || ptr == text.data()) {
        throw Error(ErrorCode::ParseError, where + ": invalid year '" + text + "'");
    }
    return value;
}

void validate_title(ArticleRecord& record, const std::string& where) {
    record.title = trim(record.title);
    if (normalize_title(record.title).empty()) {
        throw Error(ErrorCode::ParseError, where + ": empty title");
    }
}

std::vector<std::string> split_authors(const std::string& cell, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : cell) {
        if (c == sep) {
            std::string t = trim(current);
            if (!t.empty()) out.push_back(t);
            current.clear();
        } else {
            current += c;
        }
    }
    std::string t = trim(current);
    if (!t.empty()) out.push_back(t);
    return out;
}

RankedList parse_csv_export(std::istream& content, const std::string& label) {
    auto rows = csv::read_all(content);
    if (rows.empty()) {
        throw Error(ErrorCode::ParseError, "empty file: missing CSV header");
    }
    std::vector<std::string> header;
    for (const auto& cell : rows.front()) header.push_back(lower_ascii(trim(cell)));
    const bool has_venue = header.size() == 4 && header[3] == "venue";
    const bool valid = (header.size() == 3 || has_venue) && header[0] == "title" &&
                       header[1] == "authors" && header[2] == "year";
    if (!valid) {
        throw Error(ErrorCode::ParseError,
                    "invalid CSV header: expected title,authors,year[,venue]");
    }

    RankedList list;
    list.label = label;
    std::int64_t rank = 1;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const bool all_empty =
            std::all_of(row.begin(), row.end(), [](const std::string& c) { return trim(c).empty(); });
        if (all_empty) continue;
        const std::string where = "record " + std::to_string(i);
        if (row.size() > header.size()) {
            throw Error(ErrorCode::ParseError, where + ": too many fields");
        }
        ArticleRecord record;
        record.title = row.size() > 0 ? row[0] : "";
        if (row.size() > 1) record.authors = split_authors(row[1], ';');
        if (row.size() > 2) record.year = parse_year(row[2], where);
        if (has_venue && row.size() > 3) {
            std::string venue = trim(row[3]);
            if (!venue.empty()) record.venue = venue;
        }
        record.rank = rank++;
        record.source_label = label;
        validate_title(record, where);
        list.entries.push_back(std::move(record));
    }
    return list;
}

RankedList parse_ris_export(std::istream& content, const std::string& label) {
    std::string text(std::istreambuf_iterator<char>(content), {});
    std::size_t pos = 0;
    if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) pos = 3;

    RankedList list;
    list.label = label;
    bool in_record = false;
    ArticleRecord record;
    std::int64_t rank = 1;
    std::size_t line_no = 0;
    std::size_t record_no = 0;

    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        pos = eol == std::string::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        // Tag syntax: two alphanumeric chars, spacing, "- ", value.
        std::string tag;
        std::string value;
        bool is_tag = false;
        if (line.size() >= 2 && std::isupper(static_cast<unsigned char>(line[0])) &&
            (std::isupper(static_cast<unsigned char>(line[1])) ||
             std::isdigit(static_cast<unsigned char>(line[1])))) {
            std::size_t p = 2;
            while (p < line.size() && line[p] == ' ') ++p;
            if (p < line.size() && line[p] == '-') {
                tag = line.substr(0, 2);
                value = trim(line.substr(p + 1));
                is_tag = true;
            }
        }

        if (!is_tag) {
            if (!in_record) {
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(line_no) + ": text outside a RIS record");
            }
            continue;  // continuation of a long field; ignored
        }

        if (tag == "TY") {
            if (in_record) {
                throw Error(ErrorCode::ParseError,
                            "record " + std::to_string(record_no) + ": missing ER terminator");
            }
            in_record = true;
            ++record_no;
            record = ArticleRecord{};
        } else if (!in_record) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": tag " + tag + " before TY");
        } else if (tag == "TI" || tag == "T1") {
            if (record.title.empty()) record.title = value;
        } else if (tag == "AU") {
            if (!value.empty()) record.authors.push_back(value);
        } else if (tag == "PY") {
            record.year = parse_year(value, "record " + std::to_string(record_no));
        } else if (tag == "ER") {
            const std::string where = "record " + std::to_string(record_no);
            validate_title(record, where);
            record.rank = rank++;
            record.source_label = label;
            list.entries.push_back(std::move(record));
            record = ArticleRecord{};
            in_record = false;
        }
        // other tags ignored
    }
    if (in_record) {
        throw Error(ErrorCode::ParseError,
                    "record " + std::to_string(record_no) + ": missing ER terminator");
    }
    return list;
}

// Minimal BibTeX scanner: @type{key, name = value, ...} with values in
// braces, quotes, or bare tokens. Brace characters inside values are
// dropped, whitespace runs collapse to one space.
class BibtexScanner {
public:
    BibtexScanner(const std::string& text, const std::string& label)
        : text_(text), label_(label) {}

    RankedList run() {
        RankedList list;
        list.label = label_;
        std::int64_t rank = 1;
        while (skip_to_entry()) {
            ++record_no_;
            std::string type = lower_ascii(read_identifier());
            skip_ws();
            if (type == "comment" || type == "string" || type == "preamble") {
                skip_balanced_group();
                continue;
            }
            expect('{');
            ArticleRecord record = read_entry_body();
            record.rank = rank++;
            record.source_label = label_;
            validate_title(record, where());
            list.entries.push_back(std::move(record));
        }
        return list;
    }

private:
    std::string where() const { return "record " + std::to_string(record_no_); }

    bool skip_to_entry() {
        while (pos_ < text_.size() && text_[pos_] != '@') ++pos_;
        if (pos_ >= text_.size()) return false;
        ++pos_;  // consume '@'
        return true;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw Error(ErrorCode::ParseError,
                        where() + ": expected '" + std::string(1, c) + "'");
        }
        ++pos_;
    }

    std::string read_identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '-'))
            ++pos_;
        if (pos_ == start) {
            throw Error(ErrorCode::ParseError, where() + ": expected identifier");
        }
        return text_.substr(start, pos_ - start);
    }

    void skip_balanced_group() {
        skip_ws();
        if (pos_ >= text_.size() || (text_[pos_] != '{' && text_[pos_] != '(')) return;
        char open = text_[pos_];
        char close = open == '{' ? '}' : ')';
        int depth = 0;
        for (; pos_ < text_.size(); ++pos_) {
            if (text_[pos_] == open) ++depth;
            else if (text_[pos_] == close && --depth == 0) { ++pos_; return; }
        }
        throw Error(ErrorCode::ParseError, where() + ": unbalanced group");
    }

    std::string read_braced_value() {
        int depth = 0;
        std::string out;
        for (; pos_ < text_.size(); ++pos_) {
            char c = text_[pos_];
            if (c == '{') {
                ++depth;
                if (depth == 1) continue;  // outer brace not rendered
            } else if (c == '}') {
                --depth;
                if (depth == 0) { ++pos_; return out; }
            }
            if (c != '{' && c != '}') out += c;
        }
        throw Error(ErrorCode::ParseError, where() + ": unbalanced braces in value");
    }

    std::string read_value() {
        skip_ws();
        if (pos_ >= text_.size()) {
            throw Error(ErrorCode::ParseError, where() + ": truncated entry");
        }
        std::string raw;
        if (text_[pos_] == '{') {
            raw = read_braced_value();
        } else if (text_[pos_] == '"') {
            ++pos_;
            std::size_t end = text_.find('"', pos_);
            if (end == std::string::npos) {
                throw Error(ErrorCode::ParseError, where() + ": unterminated quoted value");
            }
            raw = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
        } else {
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '}' &&
                   !std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            raw = text_.substr(start, pos_ - start);
        }
        // Collapse whitespace runs and drop stray braces.
        std::string out;
        bool in_space = false;
        for (char c : raw) {
            if (c == '{' || c == '}') continue;
            if (std::isspace(static_cast<unsigned char>(c))) {
                in_space = true;
                continue;
            }
            if (in_space && !out.empty()) out += ' ';
            in_space = false;
            out += c;
        }
        return out;
    }

    ArticleRecord read_entry_body() {
        ArticleRecord record;
        skip_ws();
        // Citation key: everything up to the first comma.
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '}') ++pos_;
        if (pos_ >= text_.size()) {
            throw Error(ErrorCode::ParseError, where() + ": truncated entry");
        }
        if (text_[pos_] == '}') { ++pos_; return record; }
        ++pos_;  // consume ','
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '}') { ++pos_; break; }
            if (pos_ >= text_.size()) {
                throw Error(ErrorCode::ParseError, where() + ": truncated entry");
            }
            std::string name = lower_ascii(read_identifier());
            expect('=');
            std::string value = read_value();
            if (name == "title") {
                record.title = value;
            } else if (name == "author") {
                record.authors = split_bibtex_authors(value);
            } else if (name == "year") {
                record.year = parse_year(value, where());
            }
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ',') { ++pos_; continue; }
            if (pos_ < text_.size() && text_[pos_] == '}') { ++pos_; break; }
            throw Error(ErrorCode::ParseError, where() + ": expected ',' or '}'");
        }
        return record;
    }

    static std::vector<std::string> split_bibtex_authors(const std::string& value) {
        std::vector<std::string> out;
        std::string current;
        std::size_t i = 0;
        while (i < value.size()) {
            // " and " as a standalone word separates authors
            if ((i == 0 || std::isspace(static_cast<unsigned char>(value[i - 1]))) &&
                value.compare(i, 3, "and") == 0 &&
                (i + 3 == value.size() || std::isspace(static_cast<unsigned char>(value[i + 3])))) {
                std::string t = trim(current);
                if (!t.empty()) out.push_back(t);
                current.clear();
                i += 3;
                continue;
            }
            current += value[i];
            ++i;
        }
        std::string t = trim(current);
        if (!t.empty()) out.push_back(t);
        return out;
    }

    const std::string& text_;
    std::string label_;
    std::size_t pos_ = 0;
    std::size_t record_no_ = 0;
};

} // namespace

std::string DedupKey::render() const {
    std::string out = normalized_title;
    for (const auto& author : normalized_authors) {
        out += '\x1F';
        out += author;
    }
    return out;
}

ExportFormat parse_format_name(const std::string& name) {
    std::string n = lower_ascii(trim(name));
    if (n == "csv") return ExportFormat::Csv;
    if (n == "ris") return ExportFormat::Ris;
    if (n == "bibtex" || n == "bib") return ExportFormat::Bibtex;
    throw Error(ErrorCode::UnsupportedFormat, "unsupported export format '" + name + "'");
}

std::string normalize_title(const std::string& title) {
    return normalize_text(title, " ");
}

std::string normalize_author_family(const std::string& author) {
    std::string base = trim(author);
    std::size_t comma = base.find(',');
    if (comma != std::string::npos) base = trim(base.substr(0, comma));
    std::size_t last_space = base.find_last_of(" \t");
    if (last_space != std::string::npos) base = base.substr(last_space + 1);
    return normalize_text(base, "");
}

DedupKey normalize_key(const ArticleRecord& record) {
    DedupKey key;
    key.normalized_title = normalize_title(record.title);
    if (key.normalized_title.empty()) {
        throw Error(ErrorCode::EmptyTitle, "title normalizes to an empty string");
    }
    for (const auto& author : record.authors) {
        std::string family = normalize_author_family(author);
        if (!family.empty()) key.normalized_authors.insert(family);
    }
    return key;
}

RankedList parse_export(std::istream& content, ExportFormat format, const std::string& label) {
    switch (format) {
    case ExportFormat::Csv:
        return parse_csv_export(content, label);
    case ExportFormat::Ris:
        return parse_ris_export(content, label);
    case ExportFormat::Bibtex: {
        std::string text(std::istreambuf_iterator<char>(content), {});
        if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);
        return BibtexScanner(text, label).run();
    }
    }
    throw Error(ErrorCode::UnsupportedFormat, "unsupported export format");
}

void write_csv(std::ostream& out, const RankedList& list) {
    csv::write_row(out, {"title", "authors", "year", "venue"});
    for (const auto& record : list.entries) {
        std::string authors;
        for (std::size_t i = 0; i < record.authors.size(); ++i) {
            if (i > 0) authors += ';';
            authors += record.authors[i];
        }
        csv::write_row(out, {record.title, authors,
                             record.year ? std::to_string(*record.year) : "",
                             record.venue.value_or("")});
    }
}

std::vector<DedupKey> dedup_prefix(const RankedList& list, std::size_t n) {
    std::vector<DedupKey> keys;
    std::unordered_set<std::string> seen;
    const std::size_t limit = std::min(n, list.entries.size());
    for (std::size_t i = 0; i < limit; ++i) {
        DedupKey key = normalize_key(list.entries[i]);
        if (seen.insert(key.render()).second) keys.push_back(std::move(key));
    }
    return keys;
}

} // namespace recap
