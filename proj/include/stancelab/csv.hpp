#pragma once
// Minimal CSV reader/writer for the stage artifacts. Quoting follows RFC
// 4180: fields containing comma, quote or newline are quoted, embedded
// quotes doubled.

#include <iosfwd>
#include <string>
#include <vector>

namespace stancelab {

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void row(const std::vector<std::string>& fields);

private:
    std::ostream& out_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column index by header name; throws ParseError if absent.
    size_t col(const std::string& name) const;
};

// Parses a whole CSV document with a header row.
CsvTable read_csv(std::istream& in, const std::string& what);
CsvTable read_csv_file(const std::string& path);

std::string csv_escape(const std::string& field);

}  // namespace stancelab
