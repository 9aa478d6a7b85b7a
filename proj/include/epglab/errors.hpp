#ifndef EPGLAB_ERRORS_HPP
#define EPGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace epglab {

enum class Errc {
    NotLatinSquare,
    NotAssociative,
    NoIdentityAtZero,
    BadParameter,
    ProductTooLarge,
    VertexOutOfRange,
    TooLargeForExactSearch,
    TooManyCliques,
    NotTransitive,
    NotAbelianEpg,
    TupleOutOfRange,
    TooLarge,
    ConditionsViolated,
    MarkingStuck,
    NotNilpotent,
    NoExponentElement,
    SearchBudgetExceeded,
    ConstructionFailed,
    InvalidInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace epglab

#endif
