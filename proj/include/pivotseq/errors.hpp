#ifndef PIVOTSEQ_ERRORS_HPP
#define PIVOTSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pivotseq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class NonSquareError : public Error {
public:
    using Error::Error;
};

class SizeMismatchError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class EmptySelectionError : public Error {
public:
    using Error::Error;
};

class SingularBasisError : public Error {
public:
    using Error::Error;
};

class SingularBorderedBasisError : public Error {
public:
    using Error::Error;
};

class InvalidCertificateError : public Error {
public:
    using Error::Error;
};

class NoBlockingComponentError : public Error {
public:
    using Error::Error;
};

class InnerLoopCapExceededError : public Error {
public:
    using Error::Error;
};

class InstanceTooLargeError : public Error {
public:
    using Error::Error;
};

class PartitionRepairFailedError : public Error {
public:
    using Error::Error;
};

class CertificateAssemblyFailedError : public Error {
public:
    using Error::Error;
};

class DirectionUnavailableError : public Error {
public:
    using Error::Error;
};

// Signals that an exactly-provable identity failed to hold; always a defect,
// never an input condition.
class IdentityViolatedError : public Error {
public:
    using Error::Error;
};

// Any other internal consistency breach (counting identities, cross-checks).
class InternalInvariantError : public Error {
public:
    using Error::Error;
};

} // namespace pivotseq

#endif
