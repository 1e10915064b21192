#pragma once
#include <stdexcept>
#include <string>

namespace cutcactus {

enum class Errc {
    ParseError,
    InvalidGraph,
    NoThickness,
    BudgetExceeded,
    DegenerateComponent,
    MalformedWheel,
    NoRefinement,
    WheelViolation,
    NotLinear,
    WitnessNotFound,
    AxiomViolation,
    CompletionDiverged,
    NonConvexBlock,
    NotAdjacent,
    NotTreelike,
    EmptyMedianSet,
    NotAutomorphism,
    InvertsInterval,
    NotCommuting,
    OverlapPresent,
    ContractViolation,
    UnknownFamily,
    PreconditionFailed,
    InternalError,
};

const char* errc_name(Errc c);

// Single exception type carrying a structured code; messages include the code
// name so CLI errors stay grep-able.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace cutcactus
