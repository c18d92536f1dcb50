#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace recap::csv {

// Reads all CSV records (RFC 4180 style: quoted fields, "" escapes,
// newlines inside quotes, CRLF tolerated). A UTF-8 BOM at the start of
// the stream is skipped. The trailing newline does not produce a record.
// Throws ParseError on an unterminated quoted field.
std::vector<std::vector<std::string>> read_all(std::istream& in);

// Writes one record, quoting fields that contain commas, quotes or
// line breaks.
void write_row(std::ostream& out, const std::vector<std::string>& fields);

} // namespace recap::csv
