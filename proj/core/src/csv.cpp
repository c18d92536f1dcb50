#include "recap/csv.hpp"

#include <string>

#include "recap/errors.hpp"

namespace recap::csv {

std::vector<std::vector<std::string>> read_all(std::istream& in) {
    std::string content(std::istreambuf_iterator<char>(in), {});
    std::size_t pos = 0;
    if (content.size() >= 3 && content.compare(0, 3, "\xEF\xBB\xBF") == 0) pos = 3;

    std::vector<std::vector<std::string>> records;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = !row.empty();
    std::size_t line = 1;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(row));
        row.clear();
    };

    while (pos < content.size()) {
        char c = content[pos];
        if (in_quotes) {
            if (c == '"') {
                if (pos + 1 < content.size() && content[pos + 1] == '"') {
                    field += '"';
                    ++pos;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            in_quotes = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
            field_started = true;
        } else if (c == '\r' && pos + 1 < content.size() && content[pos + 1] == '\n') {
            // handled by the '\n' branch
        } else if (c == '\n') {
            end_record();
            field_started = false;
            ++line;
        } else {
            field += c;
            field_started = true;
        }
        ++pos;
    }
    if (in_quotes) {
        throw Error(ErrorCode::ParseError,
                    "unterminated quoted field at line " + std::to_string(line));
    }
    if (field_started || !row.empty() || !field.empty()) end_record();
    return records;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out << ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\r\n") != std::string::npos) {
            out << '"';
            for (char c : f) {
                if (c == '"') out << "\"\"";
                else out << c;
            }
            out << '"';
        } else {
            out << f;
        }
    }
    out << '\n';
}

} // namespace recap::csv
