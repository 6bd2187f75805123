#ifndef BLOCKCOND_ERRORS_HPP_
#define BLOCKCOND_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace blockcond {

/* Thrown for malformed or inconsistent input data: bad JSON, schema
 * violations, invalid character encodings, inner-twist structures that
 * fail validation. The path, when set, is a JSON pointer into the
 * offending document. */
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(std::string msg, std::string path = "")
        : std::runtime_error(path.empty() ? msg : msg + " (at " + path + ")")
        , path_(std::move(path))
    {
    }
    std::string const & path() const { return path_; }

  private:
    std::string path_;
};

/* Thrown when a computation reaches a state that no consistent input can
 * produce: negative conductor exponents, valuations not divisible by the
 * residue data, overrides contradicting an exactly determined level. */
class engine_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace blockcond

#endif
