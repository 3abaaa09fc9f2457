#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace dcc::detail {

// Line reader for the '%'-commented text formats.
class TextReader {
 public:
  explicit TextReader(std::istream& in) : in_(in) {}

  // Next non-comment, non-blank line split into unsigned integers.
  // Returns false at end of input.
  bool next(std::vector<std::uint64_t>& fields);
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string buf_;
  std::size_t line_ = 0;
};

}  // namespace dcc::detail
