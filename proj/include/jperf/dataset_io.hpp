#pragma once

// CSV exchange format.
//
// journals.csv   id,name,articles_t1,articles_t2
// matrix.csv     citing\cited,<id_1>,...,<id_n>
//                <id_i>,c_i1,...,c_in          (one row per citing journal)
// partition.csv  id,field                      (field is 1 or 2)
//
// Matrix header and row ids must list the journals in journals.csv order.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jperf/core.hpp"
#include "jperf/properties.hpp"

namespace jperf {

/// Splits one CSV record; handles double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);
std::string csv_escape(std::string_view field);
/// Shortest representation that parses back to the same double.
std::string format_count(double value);

JournalSet read_journals_csv(std::istream& in);
CitationMatrix read_matrix_csv(std::istream& in, const JournalSet& journals);
FieldPartition read_partition_csv(std::istream& in, const JournalSet& journals);

void write_journals_csv(std::ostream& out, const JournalSet& journals);
void write_matrix_csv(std::ostream& out, const JournalSet& journals, const CitationMatrix& matrix);
void write_partition_csv(std::ostream& out, const JournalSet& journals,
                         const FieldPartition& partition);

Instance load_dataset(const std::filesystem::path& journals_csv,
                      const std::filesystem::path& matrix_csv);
FieldPartition load_partition(const std::filesystem::path& partition_csv,
                              const JournalSet& journals);

/// Writes journals.csv and matrix.csv into `dir`, creating it if needed.
void export_dataset(const Instance& instance, const std::filesystem::path& dir);

}  // namespace jperf
