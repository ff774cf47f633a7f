#ifndef GLUE_ERROR_HPP
#define GLUE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glue {

/// Root of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Position-carrying parse failure. Lines and columns are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        detail_(std::move(message)),
        line_(line),
        column_(column) {}

  const std::string& detail() const { return detail_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

class UnknownSort : public Error {
 public:
  explicit UnknownSort(const std::string& name) : Error("unknown sort: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnknownConstant : public Error {
 public:
  explicit UnknownConstant(const std::string& name)
      : Error("unknown constant: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnknownWord : public Error {
 public:
  explicit UnknownWord(const std::string& word) : Error("unknown word: " + word), word_(word) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

class SortClash : public Error {
 public:
  explicit SortClash(const std::string& name) : Error("sort already declared: " + name) {}
};

class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(std::size_t fuel)
      : Error("normalization fuel exhausted after " + std::to_string(fuel) + " steps") {}
};

}  // namespace glue

#endif  // GLUE_ERROR_HPP
