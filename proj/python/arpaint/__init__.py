"""Autoregressive audio gap inpainting."""

from arpaint._core import (
    crossfade_weights,
    estimate_burg,
    estimate_lpc,
    extrapolate_backward,
    extrapolate_forward,
    generate_gaps,
    inpaint,
    read_wav,
    residual,
    sdr,
    sdr_inpainted,
    write_wav,
)

__all__ = [
    "crossfade_weights",
    "estimate_burg",
    "estimate_lpc",
    "extrapolate_backward",
    "extrapolate_forward",
    "generate_gaps",
    "inpaint",
    "read_wav",
    "residual",
    "sdr",
    "sdr_inpainted",
    "write_wav",
]
