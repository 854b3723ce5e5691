"""Pure-numpy convolution kernels (im2col + BLAS matmul).

All kernels take pre-padded NHWC activations and (K, K, Cin, Cout) weights.
Selected via SELFINPAINT_BACKEND=numpy, or automatically when numba is
unavailable; see `selfinpaint.nn.backend`.
"""

import numpy as np


def _out_size(padded: int, k: int, stride: int, dilation: int) -> int:
    return (padded - dilation * (k - 1) - 1) // stride + 1


def _gather_cols(xp: np.ndarray, k: int, stride: int, dilation: int) -> np.ndarray:
    b, hp, wp, cin = xp.shape
    ho = _out_size(hp, k, stride, dilation)
    wo = _out_size(wp, k, stride, dilation)
    cols = np.empty((b, ho, wo, k, k, cin), dtype=xp.dtype)
    for ky in range(k):
        for kx in range(k):
            cols[:, :, :, ky, kx, :] = xp[
                :,
                ky * dilation: ky * dilation + (ho - 1) * stride + 1: stride,
                kx * dilation: kx * dilation + (wo - 1) * stride + 1: stride,
                :,
            ]
    return cols


def conv2d_forward(xp, w, b, stride, dilation):
    k, _, cin, cout = w.shape
    cols = _gather_cols(xp, k, stride, dilation)
    nb, ho, wo = cols.shape[:3]
    y = cols.reshape(nb * ho * wo, k * k * cin) @ w.reshape(k * k * cin, cout)
    y += b
    return y.reshape(nb, ho, wo, cout)


def conv2d_backward_input(dy, w, xp_shape, stride, dilation):
    k, _, cin, cout = w.shape
    nb, ho, wo, _ = dy.shape
    dcols = dy.reshape(nb * ho * wo, cout) @ w.reshape(k * k * cin, cout).T
    dcols = dcols.reshape(nb, ho, wo, k, k, cin)
    dxp = np.zeros(xp_shape, dtype=dy.dtype)
    for ky in range(k):
        for kx in range(k):
            dxp[
                :,
                ky * dilation: ky * dilation + (ho - 1) * stride + 1: stride,
                kx * dilation: kx * dilation + (wo - 1) * stride + 1: stride,
                :,
            ] += dcols[:, :, :, ky, kx, :]
    return dxp


def conv2d_backward_weights(xp, dy, k, stride, dilation):
    nb, ho, wo, cout = dy.shape
    cin = xp.shape[3]
    cols = _gather_cols(xp, k, stride, dilation)
    dw = cols.reshape(nb * ho * wo, k * k * cin).T @ dy.reshape(nb * ho * wo, cout)
    db = dy.sum(axis=(0, 1, 2))
    return dw.reshape(k, k, cin, cout), db
