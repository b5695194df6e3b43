#pragma once

#include <stdexcept>
#include <string>

namespace diagram_forge {

  // Base class of every error thrown by the library. The CLI maps all of
  // these to exit status 2.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input document (JSON shape, unknown names, duplicates).
  class SpecError : public Error {
   public:
    using Error::Error;
  };

  class SaturationBound : public Error {
   public:
    using Error::Error;
  };

  class IllFormedRelation : public Error {
   public:
    using Error::Error;
  };

  class NotComposable : public Error {
   public:
    using Error::Error;
  };

  class NotInverse : public Error {
   public:
    using Error::Error;
  };

  class UnknownObject : public Error {
   public:
    using Error::Error;
  };

  class NotReedy : public Error {
   public:
    using Error::Error;
  };

  class NotSurjective : public Error {
   public:
    using Error::Error;
  };

  class NameCollision : public Error {
   public:
    using Error::Error;
  };

}  // namespace diagram_forge
