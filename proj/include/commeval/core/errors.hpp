#ifndef COMMEVAL_CORE_ERRORS_HPP_
#define COMMEVAL_CORE_ERRORS_HPP_

#include <stdexcept>

namespace commeval {

/// A metric was requested on an input where it has no defined value
/// (e.g. modularity of an edgeless graph).
class MetricUndefined : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The run configuration violates the evaluation protocol
/// (e.g. too few repetitions for a non-deterministic detector).
class ProtocolError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace commeval

#endif // COMMEVAL_CORE_ERRORS_HPP_
