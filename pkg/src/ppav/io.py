"""JSON interchange formats.

Integer entries are decimal strings, rationals ``"p/q"``, Gaussian rationals
``{"re": "p/q", "im": "p/q"}``. Strings keep big entries away from 64-bit
readers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from ppav.errors import DimensionMismatch
from ppav.exact import GaussianRational, Matrix, format_rational
from ppav.levels import LevelStructure
from ppav.siegel import SiegelPoint, StratumParameters
from ppav.strata import ComponentClass, ConnectivityCertificate, Edge
from ppav.symplectic import InvolutionType, SymplecticInvolution


class FormatError(ValueError):
    pass


def encode_entry(e):
    if isinstance(e, GaussianRational):
        return {"re": format_rational(e.re), "im": format_rational(e.im)}
    if isinstance(e, Fraction):
        return format_rational(e)
    if isinstance(e, int):
        return str(e)
    raise TypeError(f"cannot encode {type(e).__name__}")


def decode_entry(v):
    if isinstance(v, dict):
        try:
            return GaussianRational(Fraction(v["re"]), Fraction(v["im"]))
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad Gaussian rational {v!r}") from exc
    if isinstance(v, bool):
        raise FormatError(f"bad matrix entry {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            q = Fraction(v.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad matrix entry {v!r}") from exc
        return q.numerator if "/" not in v and q.denominator == 1 else q
    raise FormatError(f"bad matrix entry {v!r}")


def encode_matrix(M: Matrix, gaussian: bool = False) -> dict:
    enc = (lambda e: encode_entry(GaussianRational.coerce(e))) if gaussian else encode_entry
    return {"rows": M.rows, "cols": M.cols, "data": [[enc(e) for e in r] for r in M.tolist()]}


def decode_matrix(obj) -> Matrix:
    try:
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    except (KeyError, TypeError) as exc:
        raise FormatError("matrix objects need rows, cols and data") from exc
    if not isinstance(data, list) or len(data) != rows or any(
        not isinstance(r, list) or len(r) != cols for r in data
    ):
        raise FormatError(f"data grid does not match {rows}x{cols}")
    try:
        return Matrix(([decode_entry(e) for e in r] for r in data), cols=cols)
    except DimensionMismatch as exc:
        raise FormatError(str(exc)) from exc


def decode_integer_matrix(obj) -> Matrix:
    M = decode_matrix(obj)
    if not all(isinstance(e, int) for e in M.entries()):
        raise FormatError("expected an integer matrix")
    return M


def encode_type(t: InvolutionType) -> list[int]:
    return list(t.as_tuple())


def decode_type(v) -> InvolutionType:
    try:
        x, y, z = (int(e) for e in v)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad type {v!r}") from exc
    return InvolutionType(x, y, z)


def encode_involution(inv: SymplecticInvolution | Matrix) -> dict:
    M = inv.matrix if isinstance(inv, SymplecticInvolution) else inv
    return {"g": M.rows // 2, "matrix": encode_matrix(M)}


def decode_involution_matrix(obj) -> Matrix:
    """Matrix of an involution file; a bare matrix object is accepted too."""
    if isinstance(obj, dict) and "matrix" in obj:
        M = decode_integer_matrix(obj["matrix"])
        if "g" in obj and obj["g"] * 2 != M.rows:
            raise FormatError(f"g = {obj['g']} does not match a {M.rows}x{M.cols} matrix")
        return M
    return decode_integer_matrix(obj)


def encode_point(Z: SiegelPoint) -> dict:
    return {"g": Z.g, "Z": encode_matrix(Z.Z, gaussian=True)}


def decode_point(obj) -> SiegelPoint:
    if isinstance(obj, dict) and "Z" in obj:
        M = decode_matrix(obj["Z"])
        if "g" in obj and obj["g"] != M.rows:
            raise FormatError(f"g = {obj['g']} does not match a {M.rows}x{M.cols} matrix")
    else:
        M = decode_matrix(obj)
    return SiegelPoint(M)


def encode_parameters(p: StratumParameters) -> dict:
    return {
        "type": encode_type(p.type),
        "a": [encode_entry(v) for v in p.a],
        "b": [encode_entry(v) for v in p.b],
        "c": [encode_entry(v) for v in p.c],
        "d": [encode_entry(v) for v in p.d],
        "Zy": encode_matrix(p.Zy, gaussian=True),
        "Zz": encode_matrix(p.Zz, gaussian=True),
    }


def decode_parameters(obj) -> StratumParameters:
    try:
        return StratumParameters(
            decode_type(obj["type"]),
            tuple(decode_entry(v) for v in obj["a"]),
            tuple(decode_entry(v) for v in obj["b"]),
            tuple(decode_entry(v) for v in obj["c"]),
            tuple(decode_entry(v) for v in obj["d"]),
            decode_matrix(obj["Zy"]),
            decode_matrix(obj["Zz"]),
        )
    except KeyError as exc:
        raise FormatError(f"stratum parameters missing {exc}") from exc


def encode_level(L: LevelStructure) -> dict:
    return {"n": L.n, "g": L.g, "matrix": encode_matrix(L.matrix)}


def decode_level(obj, n: int | None = None) -> LevelStructure:
    """Level-structure file, or an involution/matrix file reduced mod ``n``."""
    if isinstance(obj, dict) and "n" in obj:
        n = obj["n"] if n is None else n
    if n is None:
        raise FormatError("no modulus given")
    return LevelStructure(n, decode_involution_matrix(obj))


def encode_class(c: ComponentClass) -> dict:
    return {
        "type": encode_type(c.representative),
        "dual": encode_type(c.dual),
        "dimension": c.dimension,
    }


def encode_certificate(cert: ConnectivityCertificate) -> dict:
    return {
        "g": cert.g,
        "nodes": [encode_class(c) for c in cert.nodes],
        "edges": [
            {
                "a": e.node_a,
                "b": e.node_b,
                "source": e.source,
                "witness": encode_point(e.witness),
                "inv_a": encode_involution(e.involution_a),
                "inv_b": encode_involution(e.involution_b),
                "verified": e.verified,
            }
            for e in cert.edges
        ],
        "connected": cert.connected,
    }


def decode_certificate(obj) -> ConnectivityCertificate:
    """Rebuild a certificate; edge flags are taken as claimed, recheck separately."""
    try:
        nodes = []
        for n in obj["nodes"]:
            c = ComponentClass.of(decode_type(n["type"]))
            if c.dimension != n["dimension"] or encode_type(c.dual) != list(n["dual"]):
                raise FormatError(f"inconsistent node {n!r}")
            nodes.append(c)
        edges = [
            Edge(
                int(e["a"]),
                int(e["b"]),
                decode_point(e["witness"]),
                SymplecticInvolution(decode_involution_matrix(e["inv_a"])),
                SymplecticInvolution(decode_involution_matrix(e["inv_b"])),
                e.get("source", ""),
                bool(e["verified"]),
            )
            for e in obj["edges"]
        ]
        return ConnectivityCertificate(int(obj["g"]), tuple(nodes), tuple(edges), bool(obj["connected"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed certificate: {exc}") from exc


def load_json(path: str | Path):
    with open(path) as fh:
        return json.load(fh)


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2) + "\n"
    return json.dumps(obj, separators=(",", ":")) + "\n"
