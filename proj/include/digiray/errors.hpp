#pragma once

#include <stdexcept>
#include <string>

namespace digiray {

// Categories drive the CLI exit-code contract: usage -> 2, schema -> 3,
// check -> 1.
enum class ErrorKind { usage, schema, check };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& name, const std::string& what)
        : std::runtime_error(name + ": " + what), kind_(kind), name_(name) {}

    ErrorKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

private:
    ErrorKind kind_;
    std::string name_;
};

#define DIGIRAY_ERROR_TYPE(Name, Kind)                                       \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what)                               \
            : Error(ErrorKind::Kind, #Name, what) {}                         \
    }

DIGIRAY_ERROR_TYPE(MissingParent, usage);
DIGIRAY_ERROR_TYPE(InvalidAxis, usage);
DIGIRAY_ERROR_TYPE(NotATree, usage);
DIGIRAY_ERROR_TYPE(OutOfDomain, usage);
DIGIRAY_ERROR_TYPE(NotPowerOfTwo, usage);
DIGIRAY_ERROR_TYPE(BadScale, usage);
DIGIRAY_ERROR_TYPE(InfeasibleLayer, check);
DIGIRAY_ERROR_TYPE(OddN, usage);
DIGIRAY_ERROR_TYPE(NonPositiveM, usage);
DIGIRAY_ERROR_TYPE(NotDecomposable, check);
DIGIRAY_ERROR_TYPE(SchemaError, schema);

#undef DIGIRAY_ERROR_TYPE

}  // namespace digiray
