#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "exroc/dataset.hpp"

namespace exroc {

enum class InputFormat { csv, tsv };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Label spellings: 1/pos/true/positive and 0/neg/false/negative, any case.
std::optional<Label> parse_label(std::string_view token);

/// Reads `score<sep>label` records. A first record whose label is not a
/// recognized spelling is treated as a header and skipped. Blank lines are
/// ignored. Throws ParseError (with a 1-based line number) on malformed
/// records and DegenerateClassesError if a class is missing.
Dataset parse_input(std::string_view text, InputFormat format);

}  // namespace exroc
