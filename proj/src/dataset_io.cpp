#include "jperf/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>

namespace jperf {

namespace {

[[noreturn]] void parse_error(std::string_view what, std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, fmt::format("{} line {}: {}", what, line, msg));
}

// Reads the next non-empty line; strips a trailing CR and a leading UTF-8 BOM.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!line.empty()) return true;
  }
  return false;
}

double parse_number(std::string_view text, std::string_view what, std::size_t line) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    parse_error(what, line, fmt::format("'{}' is not a number", text));
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, fmt::format("cannot open '{}'", path.string()));
  return in;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_count(double value) { return fmt::format("{}", value); }

JournalSet read_journals_csv(std::istream& in) {
  constexpr std::string_view what = "journals.csv";
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) parse_error(what, 1, "missing header");
  const auto header = split_csv_line(line);
  if (header != std::vector<std::string>{"id", "name", "articles_t1", "articles_t2"}) {
    parse_error(what, line_no, "header must be 'id,name,articles_t1,articles_t2'");
  }
  std::vector<Journal> journals;
  while (next_line(in, line, line_no)) {
    const auto cells = split_csv_line(line);
    if (cells.size() != 4) {
      parse_error(what, line_no, fmt::format("expected 4 fields, got {}", cells.size()));
    }
    journals.push_back({cells[0], cells[1], parse_number(cells[2], what, line_no),
                        parse_number(cells[3], what, line_no)});
  }
  return JournalSet(std::move(journals));
}

CitationMatrix read_matrix_csv(std::istream& in, const JournalSet& journals) {
  constexpr std::string_view what = "matrix.csv";
  const std::size_t n = journals.size();
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) parse_error(what, 1, "missing header");
  const auto header = split_csv_line(line);
  if (header.empty() || header[0] != "citing\\cited") {
    parse_error(what, line_no, "first header cell must be 'citing\\cited'");
  }
  if (header.size() != n + 1) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("matrix.csv header lists {} journals, journals.csv has {}",
                            header.size() - 1, n));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (header[j + 1] != journals[j].id) {
      parse_error(what, line_no,
                  fmt::format("column {} is '{}', expected '{}' (journals.csv order)", j + 1,
                              header[j + 1], journals[j].id));
    }
  }

  std::vector<double> counts;
  counts.reserve(n * n);
  std::size_t row = 0;
  while (next_line(in, line, line_no)) {
    const auto cells = split_csv_line(line);
    if (row >= n) parse_error(what, line_no, "more rows than journals");
    if (cells.size() != n + 1) {
      throw Error(ErrorKind::DimensionMismatch,
                  fmt::format("matrix.csv line {} has {} counts, expected {}", line_no,
                              cells.size() - 1, n),
                  row);
    }
    if (cells[0] != journals[row].id) {
      parse_error(what, line_no,
                  fmt::format("row id '{}', expected '{}' (journals.csv order)", cells[0],
                              journals[row].id));
    }
    for (std::size_t j = 1; j <= n; ++j) counts.push_back(parse_number(cells[j], what, line_no));
    ++row;
  }
  if (row != n) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("matrix.csv has {} rows, expected {}", row, n));
  }
  return CitationMatrix(n, std::move(counts));
}

FieldPartition read_partition_csv(std::istream& in, const JournalSet& journals) {
  constexpr std::string_view what = "partition.csv";
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) parse_error(what, 1, "missing header");
  if (split_csv_line(line) != std::vector<std::string>{"id", "field"}) {
    parse_error(what, line_no, "header must be 'id,field'");
  }
  std::vector<int> field_of(journals.size(), 0);
  while (next_line(in, line, line_no)) {
    const auto cells = split_csv_line(line);
    if (cells.size() != 2) parse_error(what, line_no, "expected 'id,field'");
    const auto index = journals.index_of(cells[0]);
    if (!index) parse_error(what, line_no, fmt::format("unknown journal '{}'", cells[0]));
    if (cells[1] != "1" && cells[1] != "2") {
      parse_error(what, line_no, fmt::format("field must be 1 or 2, got '{}'", cells[1]));
    }
    if (field_of[*index] != 0) {
      parse_error(what, line_no, fmt::format("journal '{}' listed twice", cells[0]));
    }
    field_of[*index] = cells[1] == "1" ? 1 : 2;
  }
  for (std::size_t i = 0; i < field_of.size(); ++i) {
    if (field_of[i] == 0) {
      parse_error(what, line_no, fmt::format("journal '{}' has no field", journals[i].id));
    }
  }
  return FieldPartition(std::move(field_of));
}

void write_journals_csv(std::ostream& out, const JournalSet& journals) {
  out << "id,name,articles_t1,articles_t2\n";
  for (const auto& j : journals.journals()) {
    out << csv_escape(j.id) << ',' << csv_escape(j.name) << ',' << format_count(j.articles_t1)
        << ',' << format_count(j.articles_t2) << '\n';
  }
}

void write_matrix_csv(std::ostream& out, const JournalSet& journals,
                      const CitationMatrix& matrix) {
  out << "citing\\cited";
  for (const auto& j : journals.journals()) out << ',' << csv_escape(j.id);
  out << '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << csv_escape(journals[i].id);
    for (double c : matrix.row(i)) out << ',' << format_count(c);
    out << '\n';
  }
}

void write_partition_csv(std::ostream& out, const JournalSet& journals,
                         const FieldPartition& partition) {
  out << "id,field\n";
  for (std::size_t i = 0; i < journals.size(); ++i) {
    out << csv_escape(journals[i].id) << ',' << partition.field_of(i) << '\n';
  }
}

Instance load_dataset(const std::filesystem::path& journals_csv,
                      const std::filesystem::path& matrix_csv) {
  auto jin = open_input(journals_csv);
  auto journals = read_journals_csv(jin);
  auto min = open_input(matrix_csv);
  auto matrix = read_matrix_csv(min, journals);
  return validate(std::move(journals), std::move(matrix));
}

FieldPartition load_partition(const std::filesystem::path& partition_csv,
                              const JournalSet& journals) {
  auto in = open_input(partition_csv);
  return read_partition_csv(in, journals);
}

void export_dataset(const Instance& instance, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error(ErrorKind::IoError,
                fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
  }
  auto write = [&](const std::filesystem::path& path, auto&& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, fmt::format("cannot write '{}'", path.string()));
    body(out);
    if (!out) throw Error(ErrorKind::IoError, fmt::format("write to '{}' failed", path.string()));
  };
  write(dir / "journals.csv", [&](std::ostream& o) { write_journals_csv(o, instance.journals()); });
  write(dir / "matrix.csv",
        [&](std::ostream& o) { write_matrix_csv(o, instance.journals(), instance.matrix()); });
}

}  // namespace jperf
