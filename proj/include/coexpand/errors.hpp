#ifndef COEXPAND_ERRORS_HPP
#define COEXPAND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coexpand {

// Exit-code taxonomy used by the CLI: 0 ok, 1 verification failure,
// 2 input/format/domain, 3 infeasible, 4 size guard.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg, int exit_code = 2)
        : std::runtime_error(msg), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error("format error: " + msg, 2) {}
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& msg) : Error("range error: " + msg, 2) {}
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& msg) : Error("index error: " + msg, 2) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("domain error: " + msg, 2) {}
};

class ZeroVectorError : public DomainError {
public:
    ZeroVectorError() : DomainError("expansion ratio undefined at the zero vector") {}
};

class ZeroMapError : public DomainError {
public:
    ZeroMapError() : DomainError("expansion constant undefined for the zero map") {}
};

class SizeGuardError : public Error {
public:
    explicit SizeGuardError(const std::string& msg) : Error("size guard: " + msg, 4) {}
};

class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& msg) : Error("infeasible: " + msg, 3) {}
};

class NoIntegerSolutionError : public Error {
public:
    explicit NoIntegerSolutionError(const std::string& msg)
        : Error("no integer solution: " + msg, 3) {}
};

class UnboundedError : public Error {
public:
    explicit UnboundedError(const std::string& msg) : Error("unbounded: " + msg, 2) {}
};

class NotPointedError : public Error {
public:
    explicit NotPointedError(const std::string& msg)
        : Error("polyhedron not pointed: " + msg, 2) {}
};

class NotTUError : public Error {
public:
    explicit NotTUError(const std::string& msg)
        : Error("matrix not totally unimodular: " + msg, 2) {}
};

class NotExactError : public Error {
public:
    explicit NotExactError(const std::string& msg)
        : Error("sequence not exact: " + msg, 2) {}
};

class NotAManifoldError : public Error {
public:
    explicit NotAManifoldError(const std::string& msg)
        : Error("not a closed oriented manifold: " + msg, 2) {}
};

class VoltageInconsistentError : public Error {
public:
    explicit VoltageInconsistentError(const std::string& msg)
        : Error("voltage assignment inconsistent: " + msg, 2) {}
};

class NotConnectedError : public Error {
public:
    explicit NotConnectedError(const std::string& msg)
        : Error("complex not connected: " + msg, 2) {}
};

} // namespace coexpand

#endif // COEXPAND_ERRORS_HPP
