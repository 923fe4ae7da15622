#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

// Base of every error raised by the library. The kind string is stable and
// is what the command line tool prints before the message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define UMBRAL_ERROR(Name)                                                   \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    }

UMBRAL_ERROR(MixedDiscriminant);
UMBRAL_ERROR(NotInvertible);
UMBRAL_ERROR(CutoffUnderflow);
UMBRAL_ERROR(NotUnimodular);
UMBRAL_ERROR(DataExhausted);
UMBRAL_ERROR(OutOfRange);
UMBRAL_ERROR(UnboundedSupport);
UMBRAL_ERROR(WindowTooNarrow);
UMBRAL_ERROR(UnknownClass);
UMBRAL_ERROR(DeterminantNotUnit);
UMBRAL_ERROR(NotInGroup);
UMBRAL_ERROR(ClosureOverflow);
UMBRAL_ERROR(DataCorrupt);
UMBRAL_ERROR(DataMissing);

#undef UMBRAL_ERROR

}  // namespace umbral
