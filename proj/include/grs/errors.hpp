#ifndef GRS_ERRORS_HPP
#define GRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grs {

// Error categories map onto CLI exit codes: validation -> 2, numerical -> 3.
enum class ErrorKind { Validation, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error validation_error(const std::string& what) {
  return Error(ErrorKind::Validation, what);
}
inline Error numerical_error(const std::string& what) {
  return Error(ErrorKind::Numerical, what);
}

}  // namespace grs

#endif
