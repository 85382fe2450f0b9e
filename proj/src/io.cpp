#include "exroc/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

namespace exroc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::optional<Label> parse_label(std::string_view token) {
  static constexpr std::array<std::string_view, 4> kPositive{"1", "pos", "true", "positive"};
  static constexpr std::array<std::string_view, 4> kNegative{"0", "neg", "false", "negative"};
  const std::string t = lower(trim(token));
  if (std::find(kPositive.begin(), kPositive.end(), t) != kPositive.end()) return Label::positive;
  if (std::find(kNegative.begin(), kNegative.end(), t) != kNegative.end()) return Label::negative;
  return std::nullopt;
}

Dataset parse_input(std::string_view text, InputFormat format) {
  const char sep = format == InputFormat::csv ? ',' : '\t';
  std::vector<Observation> obs;
  bool first_record = true;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (trim(line).empty()) continue;

    const auto cut = line.find(sep);
    if (cut == std::string_view::npos || line.find(sep, cut + 1) != std::string_view::npos)
      throw ParseError(line_no, "expected exactly two fields 'score" + std::string(1, sep) + "label'");
    const std::string_view score_text = trim(line.substr(0, cut));
    const auto label = parse_label(line.substr(cut + 1));

    if (!label) {
      if (first_record) {
        first_record = false;
        continue;  // header
      }
      throw ParseError(line_no, "unrecognized label '" + std::string(trim(line.substr(cut + 1))) + "'");
    }
    first_record = false;

    try {
      obs.push_back({Score::parse(score_text), *label});
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (obs.empty()) throw DegenerateClassesError("input contains no observations");
  return Dataset(std::move(obs));
}

}  // namespace exroc
