#include "cutcactus/errors.hpp"

namespace cutcactus {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidGraph: return "InvalidGraph";
        case Errc::NoThickness: return "NoThickness";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::DegenerateComponent: return "DegenerateComponent";
        case Errc::MalformedWheel: return "MalformedWheel";
        case Errc::NoRefinement: return "NoRefinement";
        case Errc::WheelViolation: return "WheelViolation";
        case Errc::NotLinear: return "NotLinear";
        case Errc::WitnessNotFound: return "WitnessNotFound";
        case Errc::AxiomViolation: return "AxiomViolation";
        case Errc::CompletionDiverged: return "CompletionDiverged";
        case Errc::NonConvexBlock: return "NonConvexBlock";
        case Errc::NotAdjacent: return "NotAdjacent";
        case Errc::NotTreelike: return "NotTreelike";
        case Errc::EmptyMedianSet: return "EmptyMedianSet";
        case Errc::NotAutomorphism: return "NotAutomorphism";
        case Errc::InvertsInterval: return "InvertsInterval";
        case Errc::NotCommuting: return "NotCommuting";
        case Errc::OverlapPresent: return "OverlapPresent";
        case Errc::ContractViolation: return "ContractViolation";
        case Errc::UnknownFamily: return "UnknownFamily";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::InternalError: return "InternalError";
    }
    return "Error";
}

} // namespace cutcactus
