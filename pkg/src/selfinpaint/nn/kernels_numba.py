"""Numba-jitted convolution kernels (direct NHWC loops).

Same contract as kernels_numpy: pre-padded NHWC activations, (K, K, Cin, Cout)
weights. Inner loops run over the contiguous channel axis so LLVM can
vectorize them; dtype (float32/float64) specializations compile lazily and
are cached on disk.
"""

import numpy as np
from numba import njit

from .kernels_numpy import _out_size


@njit(cache=True, fastmath=True)
def _conv_fwd(xp, w, b, out, stride, dilation):
    nb, ho, wo, cout = out.shape
    k = w.shape[0]
    cin = w.shape[2]
    for n in range(nb):
        for y in range(ho):
            for x in range(wo):
                orow = out[n, y, x]
                for co in range(cout):
                    orow[co] = b[co]
                iy0 = y * stride
                ix0 = x * stride
                for ky in range(k):
                    for kx in range(k):
                        px = xp[n, iy0 + ky * dilation, ix0 + kx * dilation]
                        for ci in range(cin):
                            v = px[ci]
                            wrow = w[ky, kx, ci]
                            for co in range(cout):
                                orow[co] += v * wrow[co]


@njit(cache=True, fastmath=True)
def _conv_bwd_input(dy, wt, dxp, stride, dilation):
    # wt is w transposed to (K, K, Cout, Cin) so the inner axpy is contiguous
    nb, ho, wo, cout = dy.shape
    k = wt.shape[0]
    cin = wt.shape[3]
    for n in range(nb):
        for y in range(ho):
            for x in range(wo):
                grow = dy[n, y, x]
                iy0 = y * stride
                ix0 = x * stride
                for ky in range(k):
                    for kx in range(k):
                        xrow = dxp[n, iy0 + ky * dilation, ix0 + kx * dilation]
                        for co in range(cout):
                            g = grow[co]
                            wrow = wt[ky, kx, co]
                            for ci in range(cin):
                                xrow[ci] += g * wrow[ci]


@njit(cache=True, fastmath=True)
def _conv_bwd_weights(xp, dy, dw, db, stride, dilation):
    nb, ho, wo, cout = dy.shape
    k = dw.shape[0]
    cin = dw.shape[2]
    for n in range(nb):
        for y in range(ho):
            for x in range(wo):
                grow = dy[n, y, x]
                for co in range(cout):
                    db[co] += grow[co]
                iy0 = y * stride
                ix0 = x * stride
                for ky in range(k):
                    for kx in range(k):
                        px = xp[n, iy0 + ky * dilation, ix0 + kx * dilation]
                        for ci in range(cin):
                            v = px[ci]
                            dwrow = dw[ky, kx, ci]
                            for co in range(cout):
                                dwrow[co] += v * grow[co]


def conv2d_forward(xp, w, b, stride, dilation):
    k, _, cin, cout = w.shape
    nb, hp, wp, _ = xp.shape
    ho = _out_size(hp, k, stride, dilation)
    wo = _out_size(wp, k, stride, dilation)
    out = np.empty((nb, ho, wo, cout), dtype=xp.dtype)
    _conv_fwd(xp, w, b.astype(xp.dtype), out, stride, dilation)
    return out


def conv2d_backward_input(dy, w, xp_shape, stride, dilation):
    dxp = np.zeros(xp_shape, dtype=dy.dtype)
    wt = np.ascontiguousarray(w.transpose(0, 1, 3, 2))
    _conv_bwd_input(dy, wt, dxp, stride, dilation)
    return dxp


def conv2d_backward_weights(xp, dy, k, stride, dilation):
    cin = xp.shape[3]
    cout = dy.shape[3]
    dw = np.zeros((k, k, cin, cout), dtype=dy.dtype)
    db = np.zeros(cout, dtype=dy.dtype)
    _conv_bwd_weights(xp, dy, dw, db, stride, dilation)
    return dw, db
