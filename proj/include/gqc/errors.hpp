#pragma once

#include <stdexcept>
#include <string>

namespace gqc {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension or layout mismatch between operands.
struct shape_error : error {
    using error::error;
};

// Input state vector is not normalized within tolerance.
struct normalization_error : error {
    using error::error;
};

// Bipartition is empty, full, or inconsistent with the party count.
struct partition_error : error {
    using error::error;
};

// Parameter outside its documented domain (q < 2, visibility outside [0,1], ...).
struct domain_error : error {
    using error::error;
};

// Requested system size exceeds the configured cap.
struct resource_error : error {
    using error::error;
};

// Matrix fails the Hermiticity check beyond tolerance.
struct symmetry_error : error {
    using error::error;
};

// Witness state carries no usable Schmidt structure for the bound.
struct degenerate_witness_error : error {
    using error::error;
};

}  // namespace gqc
