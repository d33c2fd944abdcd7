#pragma once

#include <stdexcept>
#include <string>

namespace treecycle {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TREECYCLE_ERROR(Name)                                            \
    struct Name : Error {                                                \
        explicit Name(const std::string& what = #Name) : Error(what) {}  \
    }

TREECYCLE_ERROR(CycleDetected);
TREECYCLE_ERROR(Disconnected);
TREECYCLE_ERROR(BadVertexLabel);
TREECYCLE_ERROR(WrongEdgeCount);
TREECYCLE_ERROR(CapExceeded);
TREECYCLE_ERROR(SizeMismatch);
TREECYCLE_ERROR(NotUpDown);
TREECYCLE_ERROR(OverlappingCycles);
TREECYCLE_ERROR(EdgeNotInTree);
TREECYCLE_ERROR(NotAnOrdering);
TREECYCLE_ERROR(NotAConsecutivePath);
TREECYCLE_ERROR(NotAForkedPath);
TREECYCLE_ERROR(CycleCreated);
TREECYCLE_ERROR(NotPathType);
TREECYCLE_ERROR(IndexOutOfRange);
TREECYCLE_ERROR(HypothesisViolated);
TREECYCLE_ERROR(NotAnNCycle);
TREECYCLE_ERROR(NotLemmaShape);
TREECYCLE_ERROR(UsageError);
TREECYCLE_ERROR(InputParseError);

#undef TREECYCLE_ERROR

}  // namespace treecycle
