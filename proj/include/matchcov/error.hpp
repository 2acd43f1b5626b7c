#pragma once

#include <stdexcept>
#include <string>

namespace mc {

enum class Errc {
    DisconnectedGraph,
    Unreachable,
    TooLarge,
    OddOrder,
    BoundExceeded,
    NoPerfectMatching,
    NotUniquelyMatchable,
    NotSolitary,
    NotRGraph,
    OrderTooSmall,
    UnmatchableEdge,
    NotMatchingCovered,
    NotEven2Cut,
    NotTwoConnected,
    EmptyOrFullShore,
    DegreeMismatch,
    NotRegular,
    NotPerfectMatching,
    PreconditionUnmet,
    CapViolated,
    BadOrder,
    BadLadder,
    BadIndex,
    BadParams,
    IneligibleVertex,
    BadGlueEdge,
    Bipartite,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace mc
