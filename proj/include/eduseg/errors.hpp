#ifndef EDUSEG_ERRORS_HPP
#define EDUSEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eduseg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is not valid UTF-8.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// A lexicon parsed to zero entries; segmentation without markers is refused.
class EmptyLexiconError : public Error {
 public:
  using Error::Error;
};

// Pre-tagged input does not align token-for-token with the tokenized text.
class AlignmentError : public Error {
 public:
  AlignmentError(std::size_t sentence, std::size_t token, const std::string& what)
      : Error(what), sentence(sentence), token(token) {}
  std::size_t sentence;
  std::size_t token;
};

// A merge pass was asked to run over tokens without POS tags.
class MissingPosError : public Error {
 public:
  using Error::Error;
};

// A candidate document has no reference counterpart.
class UnknownDocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace eduseg

#endif
