#pragma once

#include <stdexcept>
#include <string>

namespace tyco {

// Every contract violation raised by the library derives from Error so the
// CLI can map it to exit code 1; IoError maps to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define TYCO_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

TYCO_DEFINE_ERROR(ConfigError)
TYCO_DEFINE_ERROR(ContractError)
TYCO_DEFINE_ERROR(ShapeError)
TYCO_DEFINE_ERROR(VocabError)
TYCO_DEFINE_ERROR(AlignmentError)
TYCO_DEFINE_ERROR(CorpusFormatError)
TYCO_DEFINE_ERROR(IoError)

#undef TYCO_DEFINE_ERROR

}  // namespace tyco
