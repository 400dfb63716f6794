#pragma once

#include <complex>
#include <vector>

#include "ssri/frame.hpp"

namespace ssri {

/// Complex-valued 2D grid, row-major, same coordinate convention as Frame.
struct ComplexField {
    int width = 0;
    int height = 0;
    std::vector<std::complex<double>> data;

    ComplexField() = default;
    ComplexField(int w, int h);

    std::complex<double>& at(int row, int col) {
        return data[static_cast<size_t>(row) * width + col];
    }
    std::complex<double> at(int row, int col) const {
        return data[static_cast<size_t>(row) * width + col];
    }
};

/// Centered unitary 2D DFT. The spatial origin is taken at the frame's
/// centered-origin pixel and the DC bin lands on the same pixel of the output;
/// both are plain index reorderings (quadrant swaps), so Parseval holds exactly
/// up to rounding. Any W,H >= 2 is accepted.
ComplexField dft2_centered(const Frame& frame);

/// Exact inverse of dft2_centered.
ComplexField idft2_centered(const ComplexField& field);

/// Element-wise complex modulus.
Frame magnitude(const ComplexField& field);

/// Element-wise squared modulus; the intensity-detection model (phase discarded).
Frame power_spectrum(const ComplexField& field);

} // namespace ssri
