"""Numpy implementations of the bitset kernels; same contracts as the compiled ones."""
import numpy as np


def vset_product(X: np.ndarray, Y: np.ndarray, clear_diag: bool) -> np.ndarray:
    n, _, W = X.shape
    out = np.zeros((n, n, W), dtype=np.uint64)
    live = X.any(axis=2)
    for i in range(n):
        mids = np.flatnonzero(live[i])
        if mids.size:
            np.bitwise_or.reduce(X[i, mids, None, :] & Y[mids], axis=0, out=out[i])
    if clear_diag:
        out[np.arange(n), np.arange(n)] = 0
    return out


def vset_row_product(x: np.ndarray, Y: np.ndarray, skip: int) -> np.ndarray:
    n, _, W = Y.shape
    out = np.zeros((n, W), dtype=np.uint64)
    mids = np.flatnonzero(x.any(axis=1))
    if mids.size:
        np.bitwise_or.reduce(x[mids, None, :] & Y[mids], axis=0, out=out)
    if 0 <= skip < n:
        out[skip] = 0
    return out


def vset_diag_join(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    # D[i] = OR_b X[i, b] & Y[b, i]
    return np.bitwise_or.reduce(X & Y.transpose(1, 0, 2), axis=1)


def _unpack_rows(X: np.ndarray, n: int) -> np.ndarray:
    as_bytes = np.ascontiguousarray(X, dtype="<u8").view(np.uint8)
    bits = np.unpackbits(as_bytes, axis=-1, bitorder="little")
    return bits[..., :n].astype(bool)


def bool_product(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    n, W = X.shape
    mask = _unpack_rows(X, n)
    picked = np.where(mask[:, :, None], Y[None, :, :], np.uint64(0))
    return np.bitwise_or.reduce(picked, axis=1)


def bool_row_product(x: np.ndarray, Y: np.ndarray) -> np.ndarray:
    n, W = Y.shape
    rows = np.flatnonzero(_unpack_rows(x, n))
    if not rows.size:
        return np.zeros(W, dtype=np.uint64)
    return np.bitwise_or.reduce(Y[rows], axis=0)
