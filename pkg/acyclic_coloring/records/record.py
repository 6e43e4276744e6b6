"""The run record (r1, r2) written by LOG, its inverse step, and the record file codec.

r1 gets a 0 per step followed by 2k-2 ones when a 2k-cycle was uncolored; r2 is a
mixed-radix integer collecting the catalog index z of every uncolored cycle.
"""

import json
import struct
from typing import List, Optional, Tuple

from pydantic import BaseModel

from acyclic_coloring.data.structures import PaletteMode, StepOutcome
from acyclic_coloring.dyck.counting import is_partial_dyck_even
from acyclic_coloring.errors import InvariantViolation, RecordCorruptionError
from acyclic_coloring.params.algo_params import AlgoParams

MAGIC = b"ACRC1"


class Record:
    """Mutable record of a run; ``log_step`` and ``pop_last_step`` update it in place."""

    def __init__(self, r1: Optional[List[int]] = None, r2: int = 0, t: Optional[int] = None, u_total: Optional[int] = None):
        self.r1: List[int] = list(r1 or [])
        self.r2 = r2
        self.t = self.r1.count(0) if t is None else t
        self.u_total = self.r1.count(1) if u_total is None else u_total
        # product of radix(k) over logged uncolorings; None when unknown (loaded records)
        self.product_radix: Optional[int] = 1 if not self.r1 else None

    def copy(self) -> "Record":
        other = Record(self.r1, self.r2, self.t, self.u_total)
        other.product_radix = self.product_radix
        return other

    def __eq__(self, other) -> bool:
        if not isinstance(other, Record):
            return NotImplemented
        return self.r1 == other.r1 and self.r2 == other.r2

    def __repr__(self) -> str:
        return f"Record(r1={self.r1_text!r}, r2={self.r2}, t={self.t}, u_total={self.u_total})"

    @property
    def r1_text(self) -> str:
        return "".join(str(b) for b in self.r1)

    @property
    def zeros(self) -> int:
        return self.t

    @property
    def ones(self) -> int:
        return self.u_total

    @property
    def r1_bits(self) -> int:
        return len(self.r1)

    @property
    def r2_bits(self) -> int:
        return self.r2.bit_length()

    def is_well_formed(self) -> bool:
        return is_partial_dyck_even(self.r1)


def log_step(rec: Record, outcome: StepOutcome, params: AlgoParams) -> Record:
    """Append one step to ``rec`` in place.

    Raises:
        InvariantViolation: uncolored outcome without a valid catalog index
    """
    rec.r1.append(0)
    rec.t += 1
    if outcome.kept:
        return rec

    k, z = outcome.k, outcome.z
    if k is None or k < 2 or z is None or z < 1:
        raise InvariantViolation(f"uncolored step at vertex {outcome.vertex} lacks a cycle length or index")
    base = params.radix(k)
    if z > base:
        raise InvariantViolation(f"catalog index {z} exceeds radix({k}) = {base}")
    rec.r1.extend([1] * (2 * k - 2))
    rec.u_total += 2 * k - 2
    rec.r2 = rec.r2 * base + (z - 1)
    if rec.product_radix is not None:
        rec.product_radix *= base
    return rec


def pop_last_step(rec: Record, params: AlgoParams) -> Tuple[Record, int, Optional[int]]:
    """Remove the last step from ``rec`` in place.

    Returns the record, the number q of trailing ones and the catalog index z (None when q = 0).

    Raises:
        RecordCorruptionError: empty record, odd descent, or trailing ones with no zero
    """
    if rec.t < 1 or not rec.r1:
        raise RecordCorruptionError("cannot pop from an empty record")
    q = 0
    while rec.r1 and rec.r1[-1] == 1:
        rec.r1.pop()
        q += 1
    if not rec.r1:
        raise RecordCorruptionError(f"{q} trailing ones without a step", rec.t)
    if q % 2:
        raise RecordCorruptionError(f"odd descent of length {q}", rec.t)
    rec.r1.pop()
    rec.t -= 1
    rec.u_total -= q
    if q == 0:
        return rec, 0, None

    k = (q + 2) // 2
    base = params.radix(k)
    rec.r2, rest = divmod(rec.r2, base)
    if rec.product_radix is not None:
        rec.product_radix //= base
    return rec, q, rest + 1


class RecordHeader(BaseModel):
    delta: int
    kappa: str
    mode: PaletteMode
    n: int
    seed: int
    t: int
    u_total: int

    def to_json_bytes(self) -> bytes:
        data = self.model_dump(mode="json")
        return json.dumps(data, sort_keys=True, separators=(",", ":")).encode("utf-8")


def _pack_bits(bits: List[int]) -> bytes:
    out = bytearray((len(bits) + 7) // 8)
    for i, b in enumerate(bits):
        if b:
            out[i >> 3] |= 0x80 >> (i & 7)
    return bytes(out)


def _unpack_bits(data: bytes, count: int) -> List[int]:
    return [(data[i >> 3] >> (7 - (i & 7))) & 1 for i in range(count)]


def encode_record(rec: Record, header: RecordHeader) -> bytes:
    """Serialize: magic, u32 header length, JSON header, u64 bit count, packed r1, u32 r2 length, r2."""
    head = header.to_json_bytes()
    r2_bytes = rec.r2.to_bytes((rec.r2.bit_length() + 7) // 8, "big") if rec.r2 else b""
    return b"".join(
        [
            MAGIC,
            struct.pack(">I", len(head)),
            head,
            struct.pack(">Q", len(rec.r1)),
            _pack_bits(rec.r1),
            struct.pack(">I", len(r2_bytes)),
            r2_bytes,
        ]
    )


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, size: int, what: str) -> bytes:
        if self.pos + size > len(self.data):
            raise RecordCorruptionError(f"record file truncated while reading {what}")
        chunk = self.data[self.pos:self.pos + size]
        self.pos += size
        return chunk


def decode_record(data: bytes) -> Tuple[RecordHeader, Record]:
    """Inverse of ``encode_record``.

    Raises:
        RecordCorruptionError: bad magic, short or trailing data, inconsistent header
    """
    reader = _Reader(data)
    if reader.take(len(MAGIC), "magic") != MAGIC:
        raise RecordCorruptionError("not a record file (bad magic)")
    (head_len,) = struct.unpack(">I", reader.take(4, "header length"))
    try:
        header = RecordHeader.model_validate_json(reader.take(head_len, "header"))
    except ValueError as e:
        raise RecordCorruptionError(f"invalid record header: {e}") from None
    (bit_count,) = struct.unpack(">Q", reader.take(8, "bit count"))
    r1 = _unpack_bits(reader.take((bit_count + 7) // 8, "r1"), bit_count)
    (r2_len,) = struct.unpack(">I", reader.take(4, "r2 length"))
    r2 = int.from_bytes(reader.take(r2_len, "r2"), "big")
    if reader.pos != len(data):
        raise RecordCorruptionError(f"{len(data) - reader.pos} trailing bytes after the record")

    rec = Record(r1, r2)
    if rec.t != header.t or rec.u_total != header.u_total:
        raise RecordCorruptionError(
            f"header says t={header.t}, u_total={header.u_total}; bits say t={rec.t}, u_total={rec.u_total}"
        )
    if not rec.is_well_formed():
        raise RecordCorruptionError("r1 is not a partial Dyck word with even descents")
    return header, rec
