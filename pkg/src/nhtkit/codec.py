"""Forward/inverse NHT block transforms and the scramble container.

Container layout (little-endian)::

    0   4  magic b"NHT1"
    4   1  format version (1)
    5   1  reserved, must be 0
    6   2  n
    8   8  m
    16  8h coefficients u0 .. u_{h-1}
    ..  8  original byte length
    ..     payload: residues of ceil(log2 m) bits, LSB-first

Input bytes are cut into symbols of floor(log2 m) bits (LSB-first), so
every symbol is already a residue; blocks are zero-padded to length n.
"""

import struct
from dataclasses import dataclass

import numpy as np

from nhtkit.circulant import NhtMatrix
from nhtkit.conditions import check_solution
from nhtkit.errors import (ContainerFormatError, InvalidKeyError, KeyMismatchError,
                           NhtError, TruncatedPayloadError)
from nhtkit.residue import dot_mod

MAGIC = b"NHT1"
VERSION = 1
_FIXED = struct.Struct("<4sBBHQ")
_U64 = struct.Struct("<Q")
_INT64_MAX = (1 << 63) - 1


@dataclass(frozen=True)
class ScrambleKey:
    """A validated NHT key; construction fails unless N N^T = I (mod m)."""

    n: int
    m: int
    coeffs: tuple

    def __post_init__(self):
        matrix = NhtMatrix(self.n, self.m, self.coeffs)
        verdict = check_solution(matrix.coeffs, self.m)
        if not verdict.passed:
            raise InvalidKeyError(
                f"coefficients {matrix.coeffs} are not an NHT key mod {self.m}: "
                f"{verdict.describe()}")
        object.__setattr__(self, "coeffs", matrix.coeffs)

    @classmethod
    def from_coeffs(cls, coeffs, m):
        return cls(2 * len(coeffs), m, tuple(coeffs))

    @property
    def matrix(self):
        return NhtMatrix(self.n, self.m, self.coeffs)

    @property
    def symbol_bits(self):
        """Input symbol width floor(log2 m)."""
        return self.m.bit_length() - 1

    @property
    def residue_bits(self):
        """Output residue width ceil(log2 m)."""
        return (self.m - 1).bit_length()


def _check_block(matrix, block):
    block = list(block)
    if len(block) != matrix.n:
        raise NhtError(f"block length {len(block)} != n={matrix.n}")
    if not all(0 <= x < matrix.m for x in block):
        raise NhtError(f"block entries must be reduced into [0, {matrix.m})")
    return block


def apply_matrix(matrix, block):
    """G = N F mod m for any matrix, valid key or not.

    This is the unchecked entry point used to reproduce published tables
    whose coefficients are not valid keys; scrambling goes through
    :func:`forward`, which only accepts a :class:`ScrambleKey`.
    """
    block = _check_block(matrix, block)
    return [dot_mod(matrix.row(j), block, matrix.m) for j in range(matrix.n)]


def forward(key, block):
    if not isinstance(key, ScrambleKey):
        raise InvalidKeyError("forward requires a validated ScrambleKey; "
                              "use apply_matrix for unchecked coefficients")
    return apply_matrix(key.matrix, block)


def inverse(key, block):
    """F = N^T G mod m."""
    if not isinstance(key, ScrambleKey):
        raise InvalidKeyError("inverse requires a validated ScrambleKey")
    matrix = key.matrix
    block = _check_block(matrix, block)
    return [dot_mod(matrix.column(j), block, matrix.m) for j in range(matrix.n)]


def _dense_array(matrix):
    dtype = np.int64 if matrix.n * (matrix.m - 1) ** 2 <= _INT64_MAX else object
    return np.array(matrix.dense(), dtype=dtype)


def forward_blocks(key, blocks):
    """Vectorised forward transform of a ``(B, n)`` array of blocks."""
    N = _dense_array(key.matrix)
    blocks = np.asarray(blocks).astype(N.dtype)
    return (blocks @ N.T) % key.m


def inverse_blocks(key, blocks):
    N = _dense_array(key.matrix)
    blocks = np.asarray(blocks).astype(N.dtype)
    return (blocks @ N) % key.m


def _unpack(data, width, count):
    """Split ``data`` into ``count`` little-endian ``width``-bit fields."""
    bits = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8), bitorder="little")
    need = width * count
    if bits.size < need:
        bits = np.concatenate([bits, np.zeros(need - bits.size, dtype=np.uint8)])
    fields = bits[:need].reshape(count, width).astype(np.uint64)
    weights = np.left_shift(np.uint64(1), np.arange(width, dtype=np.uint64))
    return (fields * weights).sum(axis=1, dtype=np.uint64)


def _pack(values, width):
    values = np.asarray(values, dtype=np.uint64)
    shifts = np.arange(width, dtype=np.uint64)
    bits = ((values[:, None] >> shifts) & np.uint64(1)).astype(np.uint8)
    return np.packbits(bits.ravel(), bitorder="little").tobytes()


def _header(key, length):
    coeffs = b"".join(_U64.pack(u) for u in key.coeffs)
    return _FIXED.pack(MAGIC, VERSION, 0, key.n, key.m) + coeffs + _U64.pack(length)


def symbols_from_bytes(data, m):
    """Input symbols (floor(log2 m) bits each) covering ``data`` exactly."""
    width = m.bit_length() - 1
    count = -(-8 * len(data) // width)
    return _unpack(data, width, count)


def scramble_stream(key, data):
    """Scramble ``data`` into a container (bytes)."""
    if not isinstance(key, ScrambleKey):
        raise InvalidKeyError("scrambling requires a validated ScrambleKey")
    data = bytes(data)
    symbols = symbols_from_bytes(data, key.m)
    blocks = -(-symbols.size // key.n)
    if not blocks:
        return _header(key, 0)
    padded = np.zeros(blocks * key.n, dtype=np.int64)
    padded[:symbols.size] = symbols
    out = forward_blocks(key, padded.reshape(blocks, key.n))
    payload = _pack(np.asarray(out, dtype=np.uint64).ravel(), key.residue_bits)
    return _header(key, len(data)) + payload


@dataclass(frozen=True)
class ContainerHeader:
    n: int
    m: int
    coeffs: tuple
    length: int
    size: int


def read_header(container):
    """Parse and sanity-check a container header."""
    if len(container) < _FIXED.size:
        raise ContainerFormatError("container shorter than fixed header")
    magic, version, reserved, n, m = _FIXED.unpack_from(container, 0)
    if magic != MAGIC:
        raise ContainerFormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise ContainerFormatError(f"unsupported format version {version}")
    if reserved != 0:
        raise ContainerFormatError("reserved header byte is non-zero")
    if n < 4 or n % 2:
        raise ContainerFormatError(f"invalid block size n={n}")
    if not 2 <= m <= _INT64_MAX:
        raise ContainerFormatError(f"invalid modulus m={m}")
    h = n // 2
    size = _FIXED.size + 8 * h + 8
    if len(container) < size:
        raise ContainerFormatError("container shorter than its header")
    coeffs = tuple(_U64.unpack_from(container, _FIXED.size + 8 * i)[0] for i in range(h))
    if any(u >= m for u in coeffs):
        raise ContainerFormatError("recorded coefficient is not reduced mod m")
    (length,) = _U64.unpack_from(container, size - 8)
    return ContainerHeader(n, m, coeffs, length, size)


def descramble_stream(container, key):
    """Recover the original bytes; never returns partial output."""
    if not isinstance(key, ScrambleKey):
        raise InvalidKeyError("descrambling requires a validated ScrambleKey")
    container = bytes(container)
    hdr = read_header(container)
    if (hdr.n, hdr.m, hdr.coeffs) != (key.n, key.m, key.coeffs):
        raise KeyMismatchError(
            f"container was written with n={hdr.n} m={hdr.m} coeffs={hdr.coeffs}, "
            f"key has n={key.n} m={key.m} coeffs={key.coeffs}")
    sym_count = -(-8 * hdr.length // key.symbol_bits)
    blocks = -(-sym_count // key.n)
    expected = -(-blocks * key.n * key.residue_bits // 8)
    payload = container[hdr.size:]
    if len(payload) < expected:
        raise TruncatedPayloadError(
            f"payload has {len(payload)} bytes, header implies {expected}")
    if len(payload) > expected:
        raise ContainerFormatError(
            f"payload has {len(payload) - expected} unexpected trailing bytes")
    if not blocks:
        return b""
    residues = _unpack(payload, key.residue_bits, blocks * key.n)
    if np.any(residues >= np.uint64(key.m)):
        raise ContainerFormatError("payload holds a value outside [0, m)")
    symbols = inverse_blocks(key, residues.astype(np.int64).reshape(blocks, key.n)).ravel()
    if np.any(symbols[sym_count:] != 0) or np.any(symbols >= (1 << key.symbol_bits)):
        raise ContainerFormatError("decoded symbols out of range; payload is corrupt")
    return _pack(np.asarray(symbols[:sym_count], dtype=np.uint64),
                 key.symbol_bits)[:hdr.length]
