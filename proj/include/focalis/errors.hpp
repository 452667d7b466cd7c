#pragma once

#include <stdexcept>
#include <string>

namespace focalis {

/// Base of every error the library raises. `kind()` is the stable,
/// machine-readable tag reported as `error.kind` by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& msg)
      : Error("SyntaxError", "line " + std::to_string(line) + ", column " +
                                 std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

#define FOCALIS_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}     \
  }

FOCALIS_DEFINE_ERROR(DegenerateFrame);
FOCALIS_DEFINE_ERROR(DegenerateCongruence);
FOCALIS_DEFINE_ERROR(SamplingExhausted);
FOCALIS_DEFINE_ERROR(NotSquare);
FOCALIS_DEFINE_ERROR(IdenticallyZero);
FOCALIS_DEFINE_ERROR(ZeroForm);
FOCALIS_DEFINE_ERROR(RankDrop);
FOCALIS_DEFINE_ERROR(NotNondegenerate);
FOCALIS_DEFINE_ERROR(InconsistentBranch);
FOCALIS_DEFINE_ERROR(AmbiguousVerdict);
FOCALIS_DEFINE_ERROR(SegreMismatch);
FOCALIS_DEFINE_ERROR(UnknownGalleryItem);
FOCALIS_DEFINE_ERROR(ExtensionConflict);
FOCALIS_DEFINE_ERROR(DivisionByZero);
FOCALIS_DEFINE_ERROR(InexactDivision);
FOCALIS_DEFINE_ERROR(UsageError);

#undef FOCALIS_DEFINE_ERROR

}  // namespace focalis
